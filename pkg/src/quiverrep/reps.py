"""Finite-dimensional right modules over a bound quiver algebra.

A representation assigns a space dimension to each vertex and a matrix of
shape dims[target] x dims[source] to each arrow; the matrix of a longer
path [a, b] acting on the representation is M_b @ M_a.  Grothendieck
classes are realized as dimension vectors (all algebras here are basic
and split, so simples sit at vertices).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import BoundAlgebra
from .matrix import Matrix, column_space
from .quiver import Path

DimVector = tuple[int, ...]


class Representation:
    """Vertex space dimensions plus one matrix per arrow.

    Matrices may be omitted at construction; missing arrows act as zero.
    Shape and field consistency is enforced here; whether the relations
    are satisfied is a separate check (:func:`validate`).
    """

    def __init__(self, algebra: BoundAlgebra, dims, matrices: dict[str, Matrix] | None = None):
        dims = tuple(int(d) for d in dims)
        if len(dims) != algebra.quiver.vertex_count:
            raise ValueError("dimension vector length must match the vertex count")
        if any(d < 0 for d in dims):
            raise ValueError("dimensions must be non-negative")
        matrices = dict(matrices or {})
        full: dict[str, Matrix] = {}
        for a in algebra.quiver.arrows:
            m = matrices.pop(a.name, None)
            want_rows, want_cols = dims[a.target - 1], dims[a.source - 1]
            if m is None:
                m = Matrix.zeros(algebra.field, want_rows, want_cols)
            if m.field != algebra.field:
                raise ValueError(f"matrix for {a.name!r} is over the wrong field")
            if (m.rows, m.cols) != (want_rows, want_cols):
                raise ValueError(
                    f"matrix for {a.name!r} has shape {m.rows}x{m.cols}, "
                    f"expected {want_rows}x{want_cols}"
                )
            full[a.name] = m
        if matrices:
            raise ValueError(f"unknown arrows: {sorted(matrices)}")
        self.algebra = algebra
        self.dims = dims
        self.matrices = full

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def matrix(self, arrow_name: str) -> Matrix:
        return self.matrices[arrow_name]

    def path_matrix(self, path: Path) -> Matrix:
        """The action of a path: arrow matrices composed in traversal order."""
        m = Matrix.identity(self.algebra.field, self.dim(path.source))
        for name in path.arrows:
            m = self.matrices[name] @ m
        return m

    def element_matrix(self, x: dict[int, object]) -> tuple[Matrix, int, int] | None:
        """The action of an algebra element supported on one (source, target) pair."""
        pairs = {(self.algebra.path_basis[k].source, self.algebra.path_basis[k].target)
                 for k in x}
        if len(pairs) != 1:
            raise ValueError("element is not supported on a single vertex pair")
        (s, t), = pairs
        out = Matrix.zeros(self.algebra.field, self.dim(t), self.dim(s))
        for k, c in x.items():
            out = out + self.path_matrix(self.algebra.path_basis[k]).scale(c)
        return out, s, t

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Representation)
            and self.algebra == other.algebra
            and self.dims == other.dims
            and self.matrices == other.matrices
        )

    def __repr__(self) -> str:
        return f"Representation(dims={self.dims} over {self.algebra!r})"


@dataclass
class ValidationReport:
    ok: bool
    violations: list[tuple[int, str, Matrix]]


def validate(r: Representation) -> ValidationReport:
    """Evaluate every relation of the algebra on the representation."""
    violations = []
    f = r.algebra.field
    for idx, rel in enumerate(r.algebra.relations):
        total = Matrix.zeros(f, r.dim(rel.target), r.dim(rel.source))
        for c, p in rel.terms:
            total = total + r.path_matrix(p).scale(f.canon(c))
        if not total.is_zero():
            violations.append((idx, repr(rel), total))
    return ValidationReport(ok=not violations, violations=violations)


def dim_vector(r: Representation) -> DimVector:
    return r.dims


def zero_representation(a: BoundAlgebra) -> Representation:
    return Representation(a, [0] * a.quiver.vertex_count)


def simple(a: BoundAlgebra, i: int) -> Representation:
    """The simple module concentrated at vertex i."""
    dims = [0] * a.quiver.vertex_count
    dims[i - 1] = 1
    return Representation(a, dims)


def projective(a: BoundAlgebra, i: int) -> Representation:
    """The indecomposable projective e_i A, on the basis of paths starting at i.

    The arrow action is post-composition, re-expressed in the path basis
    through the structure constants.
    """
    cached = a._projectives.get(i)
    if cached is not None:
        return cached
    basis = a.basis_from(i)  # [(global_index, path starting at i)]
    by_vertex: dict[int, list[int]] = {v: [] for v in a.quiver.vertices()}
    for gi, p in basis:
        by_vertex[p.target].append(gi)
    pos = {gi: (p.target, by_vertex[p.target].index(gi)) for gi, p in basis}
    dims = [len(by_vertex[v]) for v in a.quiver.vertices()]
    matrices = {}
    f = a.field
    for arrow in a.quiver.arrows:
        u, w = arrow.source, arrow.target
        m = [[f.zero()] * len(by_vertex[u]) for _ in range(len(by_vertex[w]))]
        arrow_idx = a.basis_index[Path(u, w, (arrow.name,))]
        for col, gi in enumerate(by_vertex[u]):
            for gk, c in a.multiply_basis(gi, arrow_idx).items():
                tv, row = pos[gk]
                assert tv == w
                m[row][col] = c
        matrices[arrow.name] = Matrix.from_rows(f, m, cols=len(by_vertex[u]))
    rep = Representation(a, dims, matrices)
    a._projectives[i] = rep
    return rep


def dual(r: Representation) -> Representation:
    """The dual module over the opposite algebra: transposed matrices."""
    op = r.algebra.opposite()
    matrices = {name: m.transpose() for name, m in r.matrices.items()}
    return Representation(op, r.dims, matrices)


def injective(a: BoundAlgebra, i: int) -> Representation:
    """The indecomposable injective at vertex i, as the dual of the
    opposite-algebra projective."""
    return dual(projective(a.opposite(), i))


def direct_sum(r: Representation, s: Representation) -> Representation:
    if r.algebra != s.algebra:
        raise ValueError("summands live over different algebras")
    dims = [a + b for a, b in zip(r.dims, s.dims)]
    matrices = {
        name: Matrix.block_diag(r.algebra.field, [r.matrices[name], s.matrices[name]])
        for name in r.matrices
    }
    return Representation(r.algebra, dims, matrices)


class Subspace:
    """A subrepresentation given by per-vertex column spans.

    Closure under all arrow maps is certified at construction; the induced
    restriction matrices are kept, so the subspace can be realized as a
    representation in its own right.
    """

    def __init__(self, ambient: Representation, bases: list[Matrix]):
        q = ambient.algebra.quiver
        if len(bases) != q.vertex_count:
            raise ValueError("one basis matrix per vertex required")
        for v in q.vertices():
            if bases[v - 1].rows != ambient.dim(v):
                raise ValueError(f"basis at vertex {v} has wrong ambient dimension")
        restrictions: dict[str, Matrix] = {}
        for a in q.arrows:
            mapped = ambient.matrices[a.name] @ bases[a.source - 1]
            restr = bases[a.target - 1].solve_matrix(mapped)
            if restr is None:
                raise ValueError(f"not closed under arrow {a.name!r}")
            restrictions[a.name] = restr
        self.ambient = ambient
        self.bases = list(bases)
        self._restrictions = restrictions

    @property
    def dims(self) -> DimVector:
        return tuple(b.cols for b in self.bases)

    def as_representation(self) -> Representation:
        return Representation(self.ambient.algebra, self.dims, self._restrictions)

    def inclusion_components(self) -> list[Matrix]:
        return list(self.bases)


def radical(r: Representation) -> Subspace:
    """rad M: the sum of the images of all arrow matrices."""
    f = r.algebra.field
    bases = []
    for v in r.algebra.quiver.vertices():
        incoming = [r.matrices[a.name] for a in r.algebra.quiver.arrows_into(v)]
        stacked = Matrix.hstack(f, incoming, rows=r.dim(v))
        bases.append(column_space(stacked))
    return Subspace(r, bases)


def top(r: Representation) -> DimVector:
    """The class of M / rad M."""
    rad_dims = radical(r).dims
    return tuple(d - k for d, k in zip(r.dims, rad_dims))


def socle(r: Representation) -> DimVector:
    """The class of the largest semisimple submodule: per-vertex intersection
    of the kernels of all outgoing arrow maps."""
    f = r.algebra.field
    out = []
    for v in r.algebra.quiver.vertices():
        outgoing = [r.matrices[a.name] for a in r.algebra.quiver.arrows_from(v)]
        stacked = Matrix.vstack(f, outgoing, cols=r.dim(v))
        out.append(len(stacked.nullspace_basis()))
    return tuple(out)

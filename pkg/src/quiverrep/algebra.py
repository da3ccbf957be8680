"""Bound quiver algebras with an explicit path basis and structure constants.

The two-sided ideal generated by the relations is computed as a linear
closure, layer by path length: the length-(l) component of the ideal is
spanned by the relations of length l together with all single-arrow
extensions (on either side) of the length-(l-1) component.  This is exact
for relations whose terms share a common length; the construction stops
at the first length whose whole path layer lies inside the ideal, which
certifies admissibility and finite dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field
from .matrix import Matrix
from .quiver import Path, Quiver

_LAYER_PATH_CAP = 100_000


class NotAdmissibleError(ValueError):
    """Raised when the relation ideal is not admissible / not finite-dimensional."""


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths of length >= 2."""

    terms: tuple[tuple[object, Path], ...]

    def __init__(self, terms):
        terms = tuple((c, p) for c, p in terms)
        if not terms:
            raise ValueError("relation needs at least one term")
        s, t = terms[0][1].source, terms[0][1].target
        for _, p in terms:
            if (p.source, p.target) != (s, t):
                raise ValueError("relation terms must be parallel paths")
            if p.length < 2:
                raise ValueError("relation terms must have length >= 2")
        object.__setattr__(self, "terms", terms)

    @property
    def source(self) -> int:
        return self.terms[0][1].source

    @property
    def target(self) -> int:
        return self.terms[0][1].target

    def reverse(self) -> "Relation":
        return Relation(tuple((c, p.reverse()) for c, p in self.terms))

    def __repr__(self) -> str:
        return " + ".join(f"({c})*{p!r}" for c, p in self.terms)


class _Span:
    """A subspace of K^dim kept as reduced echelon rows, with insertion."""

    def __init__(self, field: Field, dim: int):
        self.field = field
        self.dim = dim
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def _reduce(self, vec: list) -> list:
        f = self.field
        vec = list(vec)
        for row, piv in zip(self.rows, self.pivots):
            c = vec[piv]
            if c != f.zero():
                for k in range(piv, self.dim):
                    vec[k] = f.sub(vec[k], f.mul(c, row[k]))
        return vec

    def contains(self, vec) -> bool:
        z = self.field.zero()
        return all(x == z for x in self._reduce(vec))

    def insert(self, vec) -> bool:
        """Add a vector to the span; returns True if the rank grew."""
        f = self.field
        vec = self._reduce(vec)
        piv = next((k for k, x in enumerate(vec) if x != f.zero()), None)
        if piv is None:
            return False
        inv = f.inv(vec[piv])
        vec = [f.mul(inv, x) for x in vec]
        for row in self.rows:
            c = row[piv]
            if c != f.zero():
                for k in range(piv, self.dim):
                    row[k] = f.sub(row[k], f.mul(c, vec[k]))
        at = next((i for i, p in enumerate(self.pivots) if p > piv), len(self.pivots))
        self.rows.insert(at, vec)
        self.pivots.insert(at, piv)
        return True

    def copy(self) -> "_Span":
        dup = _Span(self.field, self.dim)
        dup.rows = [row[:] for row in self.rows]
        dup.pivots = self.pivots[:]
        return dup

    @property
    def rank(self) -> int:
        return len(self.rows)


class _Layer:
    """All paths of one (source, target, length) cell plus its ideal span."""

    def __init__(self, field: Field, paths: list[Path]):
        self.paths = paths
        self.index = {p.arrows: i for i, p in enumerate(paths)}
        self.span = _Span(field, len(paths))
        self.basis_positions: list[int] = []
        self._solver: Matrix | None = None

    def select_basis(self, field: Field):
        probe = self.span.copy()
        z, o = field.zero(), field.one()
        for j in range(len(self.paths)):
            e = [z] * len(self.paths)
            e[j] = o
            if probe.insert(e):
                self.basis_positions.append(j)

    def solver(self, field: Field) -> Matrix:
        # columns: ideal basis rows, then the chosen unit vectors; invertible
        # by construction, so coordinates in that mixed basis are unique.
        if self._solver is None:
            n = len(self.paths)
            cols = [list(r) for r in self.span.rows]
            for j in self.basis_positions:
                e = [field.zero()] * n
                e[j] = field.one()
                cols.append(e)
            m = Matrix.from_rows(field, cols, cols=n).transpose()
            inv = m.invert()
            assert inv is not None
            self._solver = inv
        return self._solver

    def reduce(self, field: Field, vec) -> list:
        """Coefficients of ``vec`` on the chosen basis positions, modulo the ideal."""
        x = self.solver(field).apply(vec)
        r = self.span.rank
        return list(x[r:])


class BoundAlgebra:
    """A finite-dimensional quotient of a path algebra by an admissible ideal.

    Built via :func:`build_algebra`; immutable afterwards.  The path basis
    lists residue-class representatives (the lexicographically least paths
    outside the ideal span), grouped by (source, target).
    """

    def __init__(self, field: Field, quiver: Quiver, relations, max_length: int,
                 path_basis, nilpotency_degree: int, layers):
        self.field = field
        self.quiver = quiver
        self.relations = tuple(relations)
        self.max_length = max_length
        self.path_basis = tuple(path_basis)
        self.nilpotency_degree = nilpotency_degree
        self.dimension = len(self.path_basis)
        self.basis_index = {p: i for i, p in enumerate(self.path_basis)}
        self._layers = layers
        self._struct: dict[tuple[int, int], dict[int, object]] = {}
        self._opposite: BoundAlgebra | None = None
        self._projectives: dict[int, object] = {}
        self._build_structure_constants()

    # -- derived data --------------------------------------------------------

    def _build_structure_constants(self):
        for i, p in enumerate(self.path_basis):
            for j, q in enumerate(self.path_basis):
                if p.target != q.source:
                    continue
                prod = self.reduce_path(Path(p.source, q.target, p.arrows + q.arrows))
                if prod:
                    self._struct[(i, j)] = prod

    def multiply_basis(self, i: int, j: int) -> dict[int, object]:
        """Product of two basis residues, as basis coordinates."""
        return dict(self._struct.get((i, j), {}))

    def multiply(self, x: dict[int, object], y: dict[int, object]) -> dict[int, object]:
        """Product of algebra elements given as sparse basis coordinates."""
        f = self.field
        out: dict[int, object] = {}
        for i, ci in x.items():
            for j, cj in y.items():
                table = self._struct.get((i, j))
                if not table:
                    continue
                c = f.mul(ci, cj)
                for k, ck in table.items():
                    v = f.add(out.get(k, f.zero()), f.mul(c, ck))
                    if v == f.zero():
                        out.pop(k, None)
                    else:
                        out[k] = v
        return out

    def reduce_path(self, path: Path) -> dict[int, object]:
        """Express a path of the quiver in the residue basis (sparse)."""
        if path.length >= self.nilpotency_degree:
            return {}
        cell = (path.source, path.target, path.length)
        layer = self._layers.get(cell)
        if layer is None or path.arrows not in layer.index:
            raise ValueError(f"{path!r} is not a path of this quiver")
        n = len(layer.paths)
        z, o = self.field.zero(), self.field.one()
        vec = [z] * n
        vec[layer.index[path.arrows]] = o
        coeffs = layer.reduce(self.field, vec)
        out = {}
        for pos, c in zip(layer.basis_positions, coeffs):
            if c != z:
                out[self.basis_index[layer.paths[pos]]] = c
        return out

    def reduce_combination(self, terms) -> dict[int, object]:
        """Reduce a linear combination of (coeff, Path) terms."""
        f = self.field
        out: dict[int, object] = {}
        for c, p in terms:
            c = f.canon(c)
            for k, ck in self.reduce_path(p).items():
                v = f.add(out.get(k, f.zero()), f.mul(c, ck))
                if v == f.zero():
                    out.pop(k, None)
                else:
                    out[k] = v
        return out

    def basis_from(self, v: int) -> list[tuple[int, Path]]:
        """Basis residues whose representative path starts at vertex v."""
        return [(i, p) for i, p in enumerate(self.path_basis) if p.source == v]

    def pair_counts(self) -> dict[tuple[int, int], int]:
        counts: dict[tuple[int, int], int] = {}
        for p in self.path_basis:
            counts[(p.source, p.target)] = counts.get((p.source, p.target), 0) + 1
        return counts

    def format_element(self, x: dict[int, object]) -> str:
        if not x:
            return "0"
        parts = []
        for k in sorted(x):
            parts.append(f"({self.field.format(x[k])})*{self.path_basis[k]!r}")
        return " + ".join(parts)

    # -- constructions ---------------------------------------------------------

    def opposite(self) -> "BoundAlgebra":
        """The opposite algebra: every arrow and every relation path reversed."""
        if self._opposite is None:
            op = build_algebra(
                self.field,
                self.quiver.opposite(),
                [r.reverse() for r in self.relations],
                self.max_length,
            )
            self._opposite = op
            op._opposite = self
        return self._opposite

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BoundAlgebra)
            and self.field == other.field
            and self.quiver == other.quiver
            and self.relations == other.relations
        )

    def __hash__(self):
        return hash((self.field, self.quiver, self.relations))

    def __repr__(self) -> str:
        return (
            f"BoundAlgebra(dim={self.dimension}, vertices={self.quiver.vertex_count}, "
            f"arrows={len(self.quiver.arrows)}, relations={len(self.relations)}, "
            f"field={self.field!r})"
        )


def build_algebra(field: Field, quiver: Quiver, relations, max_length: int = 30) -> BoundAlgebra:
    """Quotient of the path algebra of ``quiver`` by the ideal the relations generate.

    Fails with :class:`NotAdmissibleError` when no length ``<= max_length``
    has its whole path layer inside the ideal.  Relation terms must share a
    common length (the layered closure is exact only for such relations).
    """
    relations = tuple(r if isinstance(r, Relation) else Relation(r) for r in relations)
    rel_by_cell: dict[tuple[int, int, int], list[Relation]] = {}
    for r in relations:
        lengths = {p.length for _, p in r.terms}
        if len(lengths) > 1:
            raise ValueError("relation terms of mixed lengths are not supported")
        for _, p in r.terms:
            for name in p.arrows:
                quiver.arrow(name)  # validates membership
        rel_by_cell.setdefault((r.source, r.target, r.terms[0][1].length), []).append(r)

    layers: dict[tuple[int, int, int], _Layer] = {}
    for v in quiver.vertices():
        layers[(v, v, 0)] = _Layer(field, [quiver.stationary(v)])
    arrow_cells: dict[tuple[int, int], list[Path]] = {}
    for a in quiver.arrows:
        arrow_cells.setdefault((a.source, a.target), []).append(
            Path(a.source, a.target, (a.name,))
        )
    for (s, t), paths in arrow_cells.items():
        layers[(s, t, 1)] = _Layer(field, sorted(paths, key=Path.key))

    prev_cells = [c for c in layers if c[2] == 1]
    nildeg = 1 if not quiver.arrows else None
    for length in range(2, max_length + 1):
        if nildeg is not None:
            break
        # extend the previous path layer by one arrow on the right
        new_paths: dict[tuple[int, int], list[Path]] = {}
        total = 0
        for (s, t, _l) in prev_cells:
            for p in layers[(s, t, _l)].paths:
                for a in quiver.arrows_from(t):
                    new_paths.setdefault((s, a.target), []).append(
                        Path(s, a.target, p.arrows + (a.name,))
                    )
                    total += 1
        if total > _LAYER_PATH_CAP:
            raise NotAdmissibleError(
                "not admissible / not finite-dimensional: path layer exceeds cap"
            )
        if not new_paths:
            nildeg = length
            break
        cells = []
        for (s, t), paths in new_paths.items():
            cell = (s, t, length)
            layers[cell] = _Layer(field, sorted(paths, key=Path.key))
            cells.append(cell)

        # ideal layer: relations of this length plus one-arrow extensions of
        # the previous ideal layer on both sides
        for cell in cells:
            s, t, _ = cell
            layer = layers[cell]
            for r in rel_by_cell.get(cell, []):
                vec = [field.zero()] * len(layer.paths)
                for c, p in r.terms:
                    pos = layer.index[p.arrows]
                    vec[pos] = field.add(vec[pos], field.canon(c))
                layer.span.insert(vec)
        for (s2, t2, _l) in prev_cells:
            prev = layers[(s2, t2, _l)]
            if not prev.span.rows:
                continue
            for row in prev.span.rows:
                for a in quiver.arrows_into(s2):
                    cell = (a.source, t2, length)
                    layer = layers[cell]
                    vec = [field.zero()] * len(layer.paths)
                    for pos, c in enumerate(row):
                        if c != field.zero():
                            arrows = (a.name,) + prev.paths[pos].arrows
                            vec[layer.index[arrows]] = c
                    layer.span.insert(vec)
                for a in quiver.arrows_from(t2):
                    cell = (s2, a.target, length)
                    layer = layers[cell]
                    vec = [field.zero()] * len(layer.paths)
                    for pos, c in enumerate(row):
                        if c != field.zero():
                            arrows = prev.paths[pos].arrows + (a.name,)
                            vec[layer.index[arrows]] = c
                    layer.span.insert(vec)

        if all(layers[c].span.rank == len(layers[c].paths) for c in cells):
            nildeg = length
            break
        prev_cells = cells
    if nildeg is None:
        raise NotAdmissibleError(
            f"not admissible / not finite-dimensional within max_length={max_length}"
        )

    # drop layers at or beyond the nilpotency degree; select basis in the rest
    layers = {c: layer for c, layer in layers.items() if c[2] < nildeg}
    basis: list[Path] = []
    for cell in sorted(layers, key=lambda c: (c[0], c[1], c[2])):
        layer = layers[cell]
        layer.select_basis(field)
        basis.extend(layer.paths[j] for j in layer.basis_positions)
    basis.sort(key=lambda p: (p.source, p.target, p.key()))
    return BoundAlgebra(field, quiver, relations, max_length, basis, nildeg, layers)


def opposite(a: BoundAlgebra) -> BoundAlgebra:
    return a.opposite()


@dataclass
class TrivialExtension:
    """Structure constants of H + D(H) with (a,f)(b,g) = (ab, ag + fb).

    Basis: the path basis of ``algebra`` followed by its dual basis; the
    canonical symmetric form ((a,f),(b,g)) -> f(b) + g(a) comes with it.
    """

    algebra: BoundAlgebra
    dim: int
    labels: tuple[str, ...]
    table: dict[tuple[int, int], dict[int, object]]
    form: Matrix

    def multiply(self, i: int, j: int) -> dict[int, object]:
        return dict(self.table.get((i, j), {}))

    def is_associative(self) -> bool:
        f = self.algebra.field
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.table.get((i, j), {})
                for k in range(self.dim):
                    left: dict[int, object] = {}
                    for m, c in ij.items():
                        for t, ct in self.table.get((m, k), {}).items():
                            left[t] = f.add(left.get(t, f.zero()), f.mul(c, ct))
                    right: dict[int, object] = {}
                    for m, c in self.table.get((j, k), {}).items():
                        for t, ct in self.table.get((i, m), {}).items():
                            right[t] = f.add(right.get(t, f.zero()), f.mul(c, ct))
                    if {m: c for m, c in left.items() if c != f.zero()} != {
                        m: c for m, c in right.items() if c != f.zero()
                    }:
                        return False
        return True


def trivial_extension(h: BoundAlgebra) -> TrivialExtension:
    """The symmetric algebra on H + D(H) as a basis-indexed multiplication table.

    The bimodule actions on the dual part are read off the structure
    constants of H: (a.f)(x) = f(xa) and (f.b)(x) = f(bx).
    """
    f = h.field
    d = h.dimension
    table: dict[tuple[int, int], dict[int, object]] = {}
    for i in range(d):
        for j in range(d):
            prod = h.multiply_basis(i, j)
            if prod:
                table[(i, j)] = prod
    # (b_i, 0) * (0, b*_m): coefficient of b*_k is the b_m-coefficient of b_k b_i
    for i in range(d):
        for m in range(d):
            out: dict[int, object] = {}
            for k in range(d):
                c = h.multiply_basis(k, i).get(m)
                if c is not None and c != f.zero():
                    out[d + k] = c
            if out:
                table[(i, d + m)] = out
    # (0, b*_m) * (b_j, 0): coefficient of b*_k is the b_m-coefficient of b_j b_k
    for m in range(d):
        for j in range(d):
            out = {}
            for k in range(d):
                c = h.multiply_basis(j, k).get(m)
                if c is not None and c != f.zero():
                    out[d + k] = c
            if out:
                table[(d + m, j)] = out
    # the dual part squares to zero: no table entries for (d+i, d+j)
    z, o = f.zero(), f.one()
    form_rows = []
    for i in range(2 * d):
        row = []
        for j in range(2 * d):
            # f(b) + g(a) on pure basis elements
            val = z
            if i >= d and j < d and i - d == j:
                val = o
            if i < d and j >= d and j - d == i:
                val = o
            row.append(val)
        form_rows.append(row)
    labels = tuple(repr(p) for p in h.path_basis) + tuple(
        f"{p!r}*" for p in h.path_basis
    )
    return TrivialExtension(h, 2 * d, labels, table, Matrix.from_rows(f, form_rows, cols=2 * d))


@dataclass
class AdmissibilityReport:
    nilpotency_degree: int
    dimension: int
    pair_counts: dict[tuple[int, int], int]
    relation_lengths_ok: bool
    passed: bool


def admissibility_report(a: BoundAlgebra) -> AdmissibilityReport:
    """Nilpotency degree, per-vertex-pair basis counts, relation sanity."""
    lengths_ok = all(all(p.length >= 2 for _, p in r.terms) for r in a.relations)
    stationary_ok = all(a.quiver.stationary(v) in a.basis_index for v in a.quiver.vertices())
    return AdmissibilityReport(
        nilpotency_degree=a.nilpotency_degree,
        dimension=a.dimension,
        pair_counts=a.pair_counts(),
        relation_lengths_ok=lengths_ok,
        passed=lengths_ok and stationary_ok,
    )

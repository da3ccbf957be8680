"""Quivers and paths.

Vertices are named 1..n.  A path records its endpoints and the arrow
names in traversal order; the empty sequence is the stationary path at a
vertex.  Composition is written left to right: the path [a, b] traverses
a first, then b.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Path:
    source: int
    target: int
    arrows: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def key(self):
        """Order key: shorter first, then by arrow-name sequence."""
        return (len(self.arrows), self.arrows)

    def reverse(self) -> "Path":
        """The same walk read backwards (a path of the opposite quiver)."""
        return Path(self.target, self.source, tuple(reversed(self.arrows)))

    def __repr__(self) -> str:
        if not self.arrows:
            return f"e{self.source}"
        return "*".join(self.arrows)


class Quiver:
    """A finite directed multigraph; loops and parallel arrows are allowed."""

    def __init__(self, vertex_count: int, arrows):
        if vertex_count <= 0:
            raise ValueError("vertex count must be positive")
        arrows = tuple(
            a if isinstance(a, Arrow) else Arrow(a[0], int(a[1]), int(a[2])) for a in arrows
        )
        names = [a.name for a in arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        for a in arrows:
            if not (1 <= a.source <= vertex_count and 1 <= a.target <= vertex_count):
                raise ValueError(f"arrow {a.name} endpoints out of range")
        self.vertex_count = vertex_count
        self.arrows = arrows
        self._by_name = {a.name: a for a in arrows}
        self._out = {v: tuple(a for a in arrows if a.source == v) for v in self.vertices()}
        self._in = {v: tuple(a for a in arrows if a.target == v) for v in self.vertices()}

    def vertices(self):
        return range(1, self.vertex_count + 1)

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"no arrow named {name!r}") from None

    def arrows_from(self, v: int):
        return self._out[v]

    def arrows_into(self, v: int):
        return self._in[v]

    def stationary(self, v: int) -> Path:
        if not 1 <= v <= self.vertex_count:
            raise ValueError(f"vertex {v} out of range")
        return Path(v, v)

    def path(self, names, source: int | None = None) -> Path:
        """Build a path from arrow names in traversal order.

        ``source`` is only needed for the empty (stationary) path.
        """
        names = tuple(names)
        if not names:
            if source is None:
                raise ValueError("stationary path needs a vertex")
            return self.stationary(source)
        first = self.arrow(names[0])
        at = first.target
        for name in names[1:]:
            a = self.arrow(name)
            if a.source != at:
                raise ValueError(f"arrows do not compose at {name!r}")
            at = a.target
        if source is not None and source != first.source:
            raise ValueError("declared source does not match the first arrow")
        return Path(first.source, at, names)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertex_count, [Arrow(a.name, a.target, a.source) for a in self.arrows])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Quiver)
            and self.vertex_count == other.vertex_count
            and self.arrows == other.arrows
        )

    def __hash__(self):
        return hash((self.vertex_count, self.arrows))

    def __repr__(self) -> str:
        arrows = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({self.vertex_count} vertices; {arrows})"

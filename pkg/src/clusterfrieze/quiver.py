"""Quivers without loops or oriented 2-cycles, and their mutations.

A quiver on vertices 1..n is encoded by its skew-symmetric integer matrix b,
where b[i][k] > 0 means b[i][k] arrows from i to k.  Skew-symmetry makes loops
and oriented 2-cycles unrepresentable, which is exactly the class of quivers
mutation is defined on.  Vertices are 1-indexed in every public interface.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Quiver:
    n: int
    b: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("quiver needs at least one vertex")
        if len(self.b) != self.n or any(len(row) != self.n for row in self.b):
            raise ValueError(f"matrix must be {self.n}x{self.n}")
        for i in range(self.n):
            if self.b[i][i] != 0:
                raise ValueError(f"loop at vertex {i + 1}")
            for k in range(self.n):
                if self.b[i][k] != -self.b[k][i]:
                    raise ValueError(f"matrix is not skew-symmetric at ({i + 1},{k + 1})")

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> Quiver:
        return cls(len(rows), tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[tuple[int, int, int]]) -> Quiver:
        """Build from (source, target, multiplicity) triples, 1-indexed."""
        b = [[0] * n for _ in range(n)]
        seen: set[frozenset[int]] = set()
        for i, k, mult in arrows:
            if not (1 <= i <= n and 1 <= k <= n):
                raise ValueError(f"arrow ({i},{k}) out of range 1..{n}")
            if i == k:
                raise ValueError(f"loop at vertex {i}")
            if mult < 1:
                raise ValueError(f"arrow multiplicity {mult} must be >= 1")
            pair = frozenset((i, k))
            if pair in seen:
                raise ValueError(f"duplicate arrow pair {{{i},{k}}}")
            seen.add(pair)
            b[i - 1][k - 1] = mult
            b[k - 1][i - 1] = -mult
        return cls(n, tuple(tuple(row) for row in b))

    def _check_vertex(self, j: int) -> None:
        if not 1 <= j <= self.n:
            raise ValueError(f"vertex {j} out of range 1..{self.n}")

    def mutate(self, j: int) -> Quiver:
        """Mutation at vertex j.

        Matrix form of the arrow-level procedure (reverse arrows at j, complete
        directed 2-paths through j to triangles, cancel oriented 2-cycles):
        entries in row/column j flip sign, the rest gain
        (|b[i][j]|*b[j][k] + b[i][j]*|b[j][k]|) / 2.
        """
        self._check_vertex(j)
        m = j - 1
        old = self.b
        new = [
            [
                -old[i][k]
                if i == m or k == m
                else old[i][k] + (abs(old[i][m]) * old[m][k] + old[i][m] * abs(old[m][k])) // 2
                for k in range(self.n)
            ]
            for i in range(self.n)
        ]
        return Quiver(self.n, tuple(tuple(row) for row in new))

    def neighbourhood(self, j: int) -> set[int]:
        """The vertex together with everything joined to it by at least one arrow."""
        self._check_vertex(j)
        return {j} | {i + 1 for i in range(self.n) if self.b[i][j - 1] != 0}

    def arrows_between(self, i: int, k: int) -> int:
        self._check_vertex(i)
        self._check_vertex(k)
        return abs(self.b[i - 1][k - 1])

    def is_independent_set(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        for v in vs:
            self._check_vertex(v)
        return all(
            self.b[v - 1][w - 1] == 0 for a, v in enumerate(vs) for w in vs[a + 1 :]
        )

    def arrows(self) -> list[tuple[int, int, int]]:
        """All arrows as sorted (source, target, multiplicity) triples."""
        out = []
        for i in range(self.n):
            for k in range(self.n):
                if self.b[i][k] > 0:
                    out.append((i + 1, k + 1, self.b[i][k]))
        return out

    def describe(self) -> str:
        if not any(self.b[i][k] for i in range(self.n) for k in range(self.n)):
            return f"{self.n} vertices, no arrows"
        parts = [
            f"{i}->{k}" + (f" x{m}" if m > 1 else "") for i, k, m in self.arrows()
        ]
        return f"{self.n} vertices, arrows: " + ", ".join(parts)

    # ------------------------------------------------------------------ JSON interface

    def to_json(self) -> dict:
        return {"n": self.n, "arrows": [[i, k, m] for i, k, m in self.arrows()]}

    @classmethod
    def from_json(cls, data: dict) -> Quiver:
        if not isinstance(data, dict) or "n" not in data or "arrows" not in data:
            raise ValueError('quiver JSON must have the form {"n": ..., "arrows": [[i, k, mult], ...]}')
        n = data["n"]
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"bad vertex count {n!r}")
        arrows = []
        for entry in data["arrows"]:
            if not (isinstance(entry, list) and len(entry) == 3 and all(isinstance(x, int) for x in entry)):
                raise ValueError(f"bad arrow entry {entry!r}")
            arrows.append(tuple(entry))
        return cls.from_arrows(n, arrows)

    @classmethod
    def load(cls, path) -> Quiver:
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def linear_quiver(n: int, orientation: Sequence[int] | None = None) -> Quiver:
    """A path quiver on n vertices.

    orientation[i] = +1 puts the arrow i+1 -> i+2, -1 reverses it; the default
    orients every edge forward.
    """
    if orientation is None:
        orientation = [1] * (n - 1)
    if len(orientation) != n - 1:
        raise ValueError(f"orientation must list {n - 1} directions, got {len(orientation)}")
    arrows = []
    for i, direction in enumerate(orientation, start=1):
        if direction not in (1, -1):
            raise ValueError(f"orientation entries must be +1 or -1, got {direction!r}")
        arrows.append((i, i + 1, 1) if direction == 1 else ((i + 1, i, 1)))
    return Quiver.from_arrows(n, arrows)


def kronecker_quiver() -> Quiver:
    """Two vertices joined by a double arrow; the smallest mutation-infinite quiver."""
    return Quiver.from_arrows(2, [(1, 2, 2)])

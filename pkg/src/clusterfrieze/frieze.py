"""Friezes from triangulated polygons.

Everything here runs through the polygon-diagonal model of type-A cluster
algebras: a triangulation of an (n+3)-gon picks the initial cluster, every
other diagonal value follows by quadrilateral exchanges (the Ptolemy relation
m[i,k]*m[j,l] = m[i,j]*m[k,l] + m[i,l]*m[j,k] for cyclically ordered vertices),
and the frieze with n nontrivial rows reads those values off along diagonals.

Frieze rows follow the polygon in reversed orientation,
entry(d, i) = m[-i mod N, -(i+d+1) mod N] with N = n+3, so the printed rows and
the fundamental domain read left to right in the conventional direction.  Rows
0 and n+1 are all 1s and rows -1 and n+2 all 0s; they take part in every check
but are not stored.

Checks on a frieze, with entry(r, i) as above:

  diamond   entry(r,i)*entry(r,i+1) - entry(r-1,i+1)*entry(r+1,i) == 1
  tame      det [[e(r,i),   e(r+1,i),   e(r+2,i)],
                 [e(r-1,i+1), e(r,i+1),  e(r+1,i+1)],
                 [e(r-2,i+2), e(r-1,i+2), e(r,i+2)]] == 0
  glide     entry(d,i) == entry(n+1-d, i+d+1 mod N)

All three hold symbolically, before any numbers are plugged in; a polyamorous
unit specialisation followed by arbitrary integer values keeps every entry an
integer, which is the bridge from specialised cluster algebras to integral
friezes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Union

from .laurent import LaurentPoly
from .quiver import Quiver
from .specialize import Specialization, is_polyamorous_algebra

Entry = Union[int, LaurentPoly]


class NotPolyamorous(ValueError):
    """The given specialisation does not make the algebra polyamorous."""


def _crossing(d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    (a, b), (c, d) = sorted(d1), sorted(d2)
    if {a, b} & {c, d}:
        return False
    return (a < c < b) != (a < d < b)


@dataclass(frozen=True)
class Triangulation:
    """n non-crossing diagonals of an (n+3)-gon with vertices 0..n+2."""

    n: int
    diagonals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one diagonal")
        size = self.n + 3
        cleaned = []
        for pair in self.diagonals:
            i, j = sorted(pair)
            if not (0 <= i < j <= size - 1):
                raise ValueError(f"diagonal {pair} out of range for a {size}-gon")
            if j - i == 1 or (i == 0 and j == size - 1):
                raise ValueError(f"{pair} is a polygon edge, not a diagonal")
            cleaned.append((i, j))
        cleaned.sort()
        if len(set(cleaned)) != self.n:
            raise ValueError(f"need {self.n} distinct diagonals, got {len(set(cleaned))}")
        for d1, d2 in combinations(cleaned, 2):
            if _crossing(d1, d2):
                raise ValueError(f"diagonals {d1} and {d2} cross")
        object.__setattr__(self, "diagonals", tuple(cleaned))

    @property
    def size(self) -> int:
        return self.n + 3

    @classmethod
    def fan(cls, n: int, apex: int = 0) -> Triangulation:
        """All diagonals out of one polygon vertex."""
        size = n + 3
        return cls(n, tuple(tuple(sorted((apex, (apex + k) % size))) for k in range(2, n + 2)))

    def edges(self) -> list[tuple[int, int]]:
        size = self.size
        out = [(i, i + 1) for i in range(size - 1)]
        out.append((0, size - 1))
        return out

    def triangles(self) -> list[tuple[int, int, int]]:
        """Faces of the triangulation; every triple whose sides are all present is a face."""
        chords = set(self.diagonals) | {tuple(sorted(e)) for e in self.edges()}
        faces = [
            (a, b, c)
            for a, b, c in combinations(range(self.size), 3)
            if (a, b) in chords and (b, c) in chords and (a, c) in chords
        ]
        if len(faces) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} triangles, found {len(faces)}")
        return faces

    def to_json(self) -> dict:
        return {"n": self.n, "diagonals": [list(d) for d in self.diagonals]}

    @classmethod
    def from_json(cls, data: dict) -> Triangulation:
        if not isinstance(data, dict) or "n" not in data or "diagonals" not in data:
            raise ValueError('triangulation JSON must have the form {"n": ..., "diagonals": [[i, j], ...]}')
        diags = []
        for pair in data["diagonals"]:
            if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, int) for x in pair)):
                raise ValueError(f"bad diagonal {pair!r}")
            diags.append(tuple(pair))
        return cls(data["n"], tuple(diags))

    @classmethod
    def load(cls, path) -> Triangulation:
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def quiver_of_triangulation(t: Triangulation) -> Quiver:
    """The quiver whose vertices are the diagonals of t, in ascending order.

    Two diagonals bounding a common triangle get one arrow; with the polygon
    numbered counterclockwise, the arrow follows the clockwise order of the
    triangle's sides, which makes the exchange products at a diagonal pair up
    the opposite sides of its quadrilateral.
    """
    index = {d: k + 1 for k, d in enumerate(t.diagonals)}
    arrows = []
    for a, b, c in t.triangles():
        clockwise = [(a, c), (b, c), (a, b)]
        for s in range(3):
            d_from, d_to = clockwise[s], clockwise[(s + 1) % 3]
            if d_from in index and d_to in index:
                arrows.append((index[d_from], index[d_to], 1))
    return Quiver.from_arrows(t.n, arrows)


@dataclass(frozen=True)
class PolygonLabelling:
    """A value on every vertex pair of the polygon: 0 on repeats, 1 on edges, filled diagonals."""

    triangulation: Triangulation
    values: Mapping[tuple[int, int], LaurentPoly]

    @property
    def n(self) -> int:
        return self.triangulation.n

    @property
    def size(self) -> int:
        return self.triangulation.size

    def value(self, i: int, j: int) -> Entry:
        i, j = i % self.size, j % self.size
        if i == j:
            return 0
        pair = (min(i, j), max(i, j))
        gap = pair[1] - pair[0]
        if gap == 1 or gap == self.size - 1:
            return 1
        return self.values[pair]

    def diagonal_values(self) -> list[LaurentPoly]:
        return [self.values[pair] for pair in sorted(self.values)]


def solve_polygon(t: Triangulation) -> PolygonLabelling:
    """Assign x_k to the k-th diagonal of t and fill in every other diagonal.

    Repeatedly completes the lexicographically smallest unfilled pair through a
    quadrilateral whose other five values are known; each completion is one
    exact division.  Any triangulation fills the whole polygon this way.
    """
    size = t.size
    n = t.n
    known: dict[tuple[int, int], LaurentPoly] = {
        d: LaurentPoly.variable(n, k + 1) for k, d in enumerate(t.diagonals)
    }
    one = LaurentPoly.one(n)

    def lookup(i: int, j: int) -> LaurentPoly | None:
        if i == j:
            return LaurentPoly.zero(n)
        pair = (min(i, j), max(i, j))
        gap = pair[1] - pair[0]
        if gap == 1 or gap == size - 1:
            return one
        return known.get(pair)

    todo = sorted(
        pair
        for pair in combinations(range(size), 2)
        if 1 < pair[1] - pair[0] < size - 1 and pair not in known
    )
    while todo:
        filled = None
        for u, v in todo:
            for b in range(u + 1, v):
                for c in [w for w in range(v + 1, size)] + [w for w in range(0, u)]:
                    # quadruple (u, b, v, c) in cyclic order; {u,v} crosses {b,c}
                    m_bc = lookup(b, c)
                    m_ub = lookup(u, b)
                    m_bv = lookup(b, v)
                    m_vc = lookup(v, c)
                    m_uc = lookup(u, c)
                    if None in (m_bc, m_ub, m_bv, m_vc, m_uc):
                        continue
                    filled = (u, v), (m_ub * m_vc + m_uc * m_bv).exact_div(m_bc)
                    break
                if filled:
                    break
            if filled:
                break
        if not filled:
            raise RuntimeError("polygon fill got stuck; triangulation invariants violated")
        pair, value = filled
        known[pair] = value
        todo.remove(pair)
    return PolygonLabelling(t, known)


# ---------------------------------------------------------------------- friezes


@dataclass(frozen=True)
class Frieze:
    """n nontrivial rows of period n+3; border rows are implicit."""

    n: int
    rows: tuple[tuple[Entry, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        if any(len(row) != self.period for row in self.rows):
            raise ValueError(f"every row must have period {self.period}")

    @property
    def period(self) -> int:
        return self.n + 3

    def entry(self, r: int, i: int) -> Entry:
        """Row r, position i; rows -1..n+2 are defined, positions wrap around."""
        if r in (-1, self.n + 2):
            return 0
        if r in (0, self.n + 1):
            return 1
        if not 0 <= r <= self.n + 1:
            raise ValueError(f"row {r} out of range -1..{self.n + 2}")
        return self.rows[r - 1][i % self.period]

    def is_integral(self) -> bool:
        return all(isinstance(e, int) for row in self.rows for e in row)

    def to_json(self) -> dict:
        if not self.is_integral():
            raise ValueError("only integer friezes have a JSON form")
        return {"n": self.n, "period": self.period, "rows": [list(r) for r in self.rows]}

    def render(self) -> str:
        """Staggered text layout over one period, border rows included.

        Row r is offset by r half-columns, so the two factors of each diamond
        sit beside each other and the other two above and below between them.
        """
        cell = max(
            len(str(self.entry(r, i)))
            for r in range(1, self.n + 1)
            for i in range(self.period)
        )
        width = cell + 1
        lines = []
        for r in range(-1, self.n + 3):
            buf = [" "] * ((2 * self.period + r + 1) * width)
            for i in range(self.period):
                col = (2 * i + r + 1) * width
                text = str(self.entry(r, i)).rjust(cell)
                buf[col : col + cell] = text
            lines.append("".join(buf).rstrip())
        return "\n".join(lines)


def _rows_from_labelling(p: PolygonLabelling) -> list[list[Entry]]:
    size = p.size
    return [
        [p.value(-i % size, (-i - d - 1) % size) for i in range(size)]
        for d in range(1, p.n + 1)
    ]


def symbolic_frieze(p: PolygonLabelling) -> Frieze:
    """The frieze whose entries are the polygon values themselves, unspecialised."""
    rows = _rows_from_labelling(p)
    return Frieze(p.n, tuple(tuple(row) for row in rows))


def frieze_from_labelling(
    p: PolygonLabelling,
    sigma: Specialization,
    int_assign: Mapping[int, int],
) -> Frieze:
    """Integer frieze from a polyamorous unit specialisation plus integer values for the rest.

    sigma lives on the vertices of quiver_of_triangulation(p.triangulation),
    i.e. on the diagonals of the initial triangulation.  It must make the
    specialised algebra polyamorous; that is what guarantees that the
    remaining variables can take any integer values, zero included, and every
    frieze entry stays an integer.
    """
    q = quiver_of_triangulation(p.triangulation)
    if not is_polyamorous_algebra(q, sigma):
        raise NotPolyamorous(
            f"specialisation {dict(sorted(sigma.assign.items()))} does not make the algebra polyamorous"
        )
    remaining = sigma.unassigned(q)
    if sorted(int_assign) != remaining:
        raise ValueError(
            f"integer assignment must cover exactly the unassigned vertices {remaining}, got {sorted(int_assign)}"
        )
    unit_part = dict(sigma.assign)
    int_part = dict(int_assign)

    def specialise(value: Entry) -> int:
        if isinstance(value, int):
            return value
        # Units first: polyamory makes the result polynomial in what is left,
        # so the remaining variables can then take any integers, 0 included.
        value = value.substitute(unit_part)
        if int_part:
            value = value.substitute(int_part)
        return value.constant_value()

    rows = [[specialise(e) for e in row] for row in _rows_from_labelling(p)]
    return Frieze(p.n, tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class FriezeReport:
    diamond_ok: bool
    tame_ok: bool
    glide_ok: bool
    diamond_violation: tuple[int, int] | None = None
    tame_violation: tuple[int, int] | None = None
    glide_violation: tuple[int, int] | None = None

    def all_ok(self) -> bool:
        return self.diamond_ok and self.tame_ok and self.glide_ok

    def to_json(self) -> dict:
        return {
            "diamond": self.diamond_ok,
            "tame": self.tame_ok,
            "glide": self.glide_ok,
            "diamond_violation": self.diamond_violation,
            "tame_violation": self.tame_violation,
            "glide_violation": self.glide_violation,
        }


def verify_frieze(f: Frieze) -> FriezeReport:
    """Check the diamond rule, tameness and glide symmetry directly on the entries.

    Works for integer and symbolic friezes alike; reports the first violating
    (row, position) of each failed check.
    """
    e = f.entry
    diamond = None
    for r in range(0, f.n + 2):
        for i in range(f.period):
            if e(r, i) * e(r, i + 1) - e(r - 1, i + 1) * e(r + 1, i) != 1:
                diamond = (r, i)
                break
        if diamond:
            break

    tame = None
    for r in range(1, f.n + 1):
        for i in range(f.period):
            m = [
                [e(r, i), e(r + 1, i), e(r + 2, i)],
                [e(r - 1, i + 1), e(r, i + 1), e(r + 1, i + 1)],
                [e(r - 2, i + 2), e(r - 1, i + 2), e(r, i + 2)],
            ]
            det = (
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            )
            if det != 0:
                tame = (r, i)
                break
        if tame:
            break

    glide = None
    for d in range(1, f.n + 1):
        for i in range(f.period):
            if e(d, i) != e(f.n + 1 - d, i + d + 1):
                glide = (d, i)
                break
        if glide:
            break

    return FriezeReport(
        diamond_ok=diamond is None,
        tame_ok=tame is None,
        glide_ok=glide is None,
        diamond_violation=diamond,
        tame_violation=tame,
        glide_violation=glide,
    )


def fundamental_domain(source: Union[Frieze, PolygonLabelling]) -> list[Entry]:
    """One glide fundamental domain, row-major: row d contributes positions 2..n+3-d.

    That is C(n+2, 2) - 1 entries, one per polygon diagonal.
    """
    if isinstance(source, PolygonLabelling):
        source = symbolic_frieze(source)
    return [
        source.entry(d, i)
        for d in range(1, source.n + 1)
        for i in range(2, source.n + 4 - d)
    ]


# --------------------------------------------------- two-row classification

_PENTAGON_PAIRS = ((0, 2), (0, 3), (1, 3), (1, 4), (2, 4))


def _pentagon_tuple(values: Mapping[tuple[int, int], int]) -> tuple[int, ...]:
    return tuple(values[pair] for pair in _PENTAGON_PAIRS)


def _dihedral_orbit(values: dict[tuple[int, int], int]) -> set[tuple[int, ...]]:
    orbit = set()
    for reflect in (False, True):
        for shift in range(5):
            moved = {}
            for (i, j), v in values.items():
                a, b = (-i, -j) if reflect else (i, j)
                a, b = (a + shift) % 5, (b + shift) % 5
                moved[(min(a, b), max(a, b))] = v
            orbit.add(_pentagon_tuple(moved))
    return orbit


def _pentagon_relations_hold(m: Mapping[tuple[int, int], int]) -> bool:
    return (
        m[(0, 2)] * m[(1, 3)] == 1 + m[(0, 3)]
        and m[(1, 3)] * m[(2, 4)] == 1 + m[(1, 4)]
        and m[(0, 3)] * m[(1, 4)] == 1 + m[(1, 3)]
        and m[(0, 3)] * m[(2, 4)] == 1 + m[(0, 2)]
        and m[(0, 2)] * m[(1, 4)] == 1 + m[(2, 4)]
    )


@dataclass(frozen=True)
class TwoRowClassification:
    bound: int
    solutions: tuple[tuple[int, ...], ...]
    positive: tuple[tuple[int, ...], ...]
    zero_family: tuple[tuple[int, ...], ...]
    unexplained: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "total": len(self.solutions),
            "positive": len(self.positive),
            "zero_family": len(self.zero_family),
            "unexplained": [list(s) for s in self.unexplained],
        }


def classify_two_row_friezes(bound: int) -> TwoRowClassification:
    """Every two-row integral frieze with entries bounded by `bound`, classified.

    The search space is pentagon labellings: five integers on the diagonals
    subject to the five quadrilateral relations, which encode the border rows,
    the diamond rule and tameness at once.  Each hit is matched against the
    translates of the unique positive frieze and against the translates and
    glide reflections of the one-parameter family containing a zero; a
    nonempty `unexplained` would refute the classification.
    """
    if bound < 3:
        raise ValueError("bound must be at least 3 to see the positive frieze")

    solutions = set()
    span = range(-bound, bound + 1)
    for m02 in span:
        for m13 in span:
            m03 = m02 * m13 - 1
            if abs(m03) > bound:
                continue
            if m03 != 0:
                if (1 + m13) % m03 != 0:
                    continue
                m14_options = [(1 + m13) // m03]
            else:
                if m13 != -1:
                    continue
                m14_options = list(span)
            for m14 in m14_options:
                if abs(m14) > bound:
                    continue
                m24 = m02 * m14 - 1
                if abs(m24) > bound:
                    continue
                values = {
                    (0, 2): m02,
                    (0, 3): m03,
                    (1, 3): m13,
                    (1, 4): m14,
                    (2, 4): m24,
                }
                if _pentagon_relations_hold(values):
                    solutions.add(_pentagon_tuple(values))

    fan = Triangulation.fan(2)
    labelling = solve_polygon(fan)

    def specialised_values(units: dict[int, int], rest: dict[int, int]) -> dict[tuple[int, int], int]:
        return {
            pair: value.substitute(units).substitute(rest).constant_value()
            for pair, value in labelling.values.items()
        }

    positive_targets = _dihedral_orbit(specialised_values({1: 1, 2: 1}, {}))
    family_targets = set()
    for t in range(-bound - 1, bound + 2):
        family = specialised_values({2: -1}, {1: t})
        if all(abs(v) <= bound for v in family.values()):
            family_targets |= _dihedral_orbit(family)

    ordered = tuple(sorted(solutions))
    positive = tuple(s for s in ordered if s in positive_targets)
    zero_family = tuple(s for s in ordered if s in family_targets and s not in positive_targets)
    unexplained = tuple(
        s for s in ordered if s not in positive_targets and s not in family_targets
    )
    return TwoRowClassification(bound, ordered, positive, zero_family, unexplained)

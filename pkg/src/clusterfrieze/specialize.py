"""Unit specialisations of initial cluster variables and the polyamory criterion.

A specialisation assigns integers to some vertices of a quiver; in the regime
the main results live in, every assigned value is +1 or -1.  An unassigned
vertex is *polyamorous* when every element of the specialised algebra is
polynomial in its variable, and the whole specialised algebra is polyamorous
when all its remaining variables are.  The combinatorial test for a single
vertex is the *polycule* condition on its neighbourhood; globally, the
polyamorous specialisations of a quiver are cut out by a linear system over
GF(2), which enumerate_polyamorous solves subset by subset.

oracle_polyamorous is deliberately slow and direct: it substitutes into every
enumerated cluster variable and inspects exponents, so it checks the polycule
criterion from the other side.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .cluster import ClusterInventory
from .quiver import Quiver


@dataclass(frozen=True)
class Specialization:
    """A partial assignment of integer values to quiver vertices (1-indexed)."""

    assign: dict[int, int]

    def __post_init__(self):
        for j, value in self.assign.items():
            if not isinstance(j, int) or j < 1:
                raise ValueError(f"bad vertex key {j!r}")
            if not isinstance(value, int):
                raise ValueError(f"bad value {value!r} at vertex {j}")

    @property
    def is_unit(self) -> bool:
        return all(v in (1, -1) for v in self.assign.values())

    def assigned(self) -> set[int]:
        return set(self.assign)

    def unassigned(self, q: Quiver) -> list[int]:
        return [v for v in range(1, q.n + 1) if v not in self.assign]

    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.assign.items()))

    def to_json(self) -> dict:
        return {"assign": {str(j): v for j, v in sorted(self.assign.items())}}

    @classmethod
    def from_json(cls, data: dict) -> Specialization:
        if not isinstance(data, dict) or "assign" not in data or not isinstance(data["assign"], dict):
            raise ValueError('specialisation JSON must have the form {"assign": {"2": -1, ...}}')
        assign = {}
        for key, value in data["assign"].items():
            try:
                j = int(key)
            except (TypeError, ValueError):
                raise ValueError(f"bad vertex key {key!r}") from None
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"bad value {value!r} at vertex {key}")
            assign[j] = value
        return cls(assign)

    @classmethod
    def load(cls, path) -> Specialization:
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def _check_sigma(q: Quiver, sigma: Specialization) -> None:
    for j in sigma.assign:
        if j > q.n:
            raise ValueError(f"assigned vertex {j} not in quiver with {q.n} vertices")
    if not sigma.is_unit:
        raise ValueError("this operation needs a +/-1 specialisation")


def is_polycule(q: Quiver, sigma: Specialization, v: int) -> bool:
    """The neighbourhood test: v unassigned, all neighbours assigned, odd arrow count to -1s.

    Arrows are counted with multiplicity, so a double arrow to a -1 neighbour
    contributes an even amount.
    """
    _check_sigma(q, sigma)
    if v in sigma.assign:
        return False
    neighbours = q.neighbourhood(v) - {v}
    if any(w not in sigma.assign for w in neighbours):
        return False
    weight = sum(q.arrows_between(v, w) for w in neighbours if sigma.assign[w] == -1)
    return weight % 2 == 1


def polyamorous_vertices(q: Quiver, sigma: Specialization) -> set[int]:
    _check_sigma(q, sigma)
    return {v for v in sigma.unassigned(q) if is_polycule(q, sigma, v)}


def is_polyamorous_algebra(q: Quiver, sigma: Specialization) -> bool:
    """True when every unassigned vertex passes the polycule test; vacuously true with none left."""
    _check_sigma(q, sigma)
    return all(is_polycule(q, sigma, v) for v in sigma.unassigned(q))


def oracle_polyamorous(q: Quiver, sigma: Specialization, j: int, inv: ClusterInventory) -> bool:
    """Direct check that every enumerated cluster variable specialises to something polynomial in x_j.

    Needs the full inventory; a truncated one could hide a witness, so it is
    refused outright.
    """
    _check_sigma(q, sigma)
    if inv.truncated:
        raise ValueError("oracle needs a fully enumerated inventory, got a truncated one")
    if j in sigma.assign:
        raise ValueError(f"vertex {j} is assigned, not a variable of the specialised algebra")
    assignment = dict(sigma.assign)
    return all(y.substitute(assignment).is_polynomial_in(j) for y in inv.variables)


@dataclass(frozen=True)
class Infeasible:
    """Report value of construct_specialization when no labelling can work."""

    reason: str
    vertex: int | None = None

    def __bool__(self) -> bool:
        return False


def construct_specialization(q: Quiver, targets: Sequence[int]) -> Specialization | Infeasible:
    """Label everything outside `targets` so that every target vertex becomes polyamorous.

    Works when the closed neighbourhoods of the targets are pairwise disjoint,
    no target is isolated, and each neighbourhood can reach odd -1-arrow
    parity.  Deterministic rule: neighbours start at +1 and are flipped to -1
    in ascending order until the parity is odd; everything else gets +1.
    """
    targets = sorted(set(targets))
    if not targets:
        raise ValueError("need a nonempty target set")
    hoods = {}
    for v in targets:
        hood = q.neighbourhood(v)
        if hood == {v}:
            return Infeasible("isolated_vertex", v)
        hoods[v] = hood
    for v, w in combinations(targets, 2):
        if hoods[v] & hoods[w]:
            return Infeasible("overlapping_neighbourhoods", v)

    assign = {u: 1 for u in range(1, q.n + 1) if u not in targets}
    for v in targets:
        parity = 0
        for w in sorted(hoods[v] - {v}):
            assign[w] = -1
            parity += q.arrows_between(v, w)
            if parity % 2 == 1:
                break
        if parity % 2 == 0:
            return Infeasible("no_odd_parity", v)
    return Specialization(assign)


# ---------------------------------------------------------------------- GF(2)


@dataclass(frozen=True)
class Gf2Solutions:
    """An affine solution space over GF(2): one particular solution plus a kernel basis."""

    particular: tuple[int, ...]
    kernel_basis: tuple[tuple[int, ...], ...]

    def count(self) -> int:
        return 1 << len(self.kernel_basis)

    def all_solutions(self) -> list[tuple[int, ...]]:
        """Every solution, sorted; only sensible for small kernels."""
        out = []
        k = len(self.kernel_basis)
        for mask in range(1 << k):
            vec = list(self.particular)
            for idx in range(k):
                if mask >> idx & 1:
                    vec = [a ^ b for a, b in zip(vec, self.kernel_basis[idx])]
            out.append(tuple(vec))
        return sorted(set(out))


def gf2_solve(
    matrix: Sequence[Sequence[int]], rhs: Sequence[int], ncols: int | None = None
) -> Gf2Solutions | None:
    """Solve M s = u over the two-element field; None when the system is inconsistent.

    ncols only needs to be passed when the matrix has no rows at all (then
    every vector of that length solves the empty system).
    """
    rows = [list(row) for row in matrix]
    b = list(rhs)
    if len(rows) != len(b):
        raise ValueError(f"{len(rows)} rows but {len(b)} right-hand sides")
    if ncols is None:
        if not rows:
            raise ValueError("pass ncols explicitly for a system with no rows")
        ncols = len(rows[0])
    for row in rows:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
        if any(x not in (0, 1) for x in row):
            raise ValueError("matrix entries must be 0 or 1")
    if any(x not in (0, 1) for x in b):
        raise ValueError("right-hand side entries must be 0 or 1")

    pivot_cols: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        b[r], b[pivot] = b[pivot], b[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[r])]
                b[i] ^= b[r]
        pivot_cols.append(col)
        r += 1
    if any(b[i] for i in range(r, len(rows))):
        return None

    particular = [0] * ncols
    for idx, col in enumerate(pivot_cols):
        particular[col] = b[idx]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        vec = [0] * ncols
        vec[free] = 1
        for idx, col in enumerate(pivot_cols):
            vec[col] = rows[idx][free]
        basis.append(tuple(vec))
    return Gf2Solutions(tuple(particular), tuple(basis))


# ------------------------------------------------------------- full enumeration

ENUMERATION_GUARD = 20


def enumerate_polyamorous(q: Quiver, include_vacuous: bool = False) -> list[Specialization]:
    """All +/-1 specialisations whose specialised algebra is polyamorous.

    For each independent subset U of vertices, taken as the surviving
    variables, the odd-parity conditions become a GF(2) system over the sign
    vector of the assigned vertices; each solution yields one specialisation.
    Specialisations that assign every vertex are vacuously polyamorous and are
    reported only when include_vacuous is set.  Output order: larger U first,
    then lexicographic U, then ascending sign vectors.
    """
    if q.n > ENUMERATION_GUARD:
        raise ValueError(f"subset enumeration is capped at {ENUMERATION_GUARD} vertices")
    out: list[Specialization] = []
    sizes = range(q.n, 0, -1) if not include_vacuous else range(q.n, -1, -1)
    for size in sizes:
        for subset in combinations(range(1, q.n + 1), size):
            if not q.is_independent_set(subset):
                continue
            assigned = [v for v in range(1, q.n + 1) if v not in subset]
            matrix = [
                [q.arrows_between(u, w) % 2 for w in assigned] for u in subset
            ]
            solutions = gf2_solve(matrix, [1] * len(subset), ncols=len(assigned))
            if solutions is None:
                continue
            for s in solutions.all_solutions():
                out.append(
                    Specialization({w: -1 if bit else 1 for w, bit in zip(assigned, s)})
                )
    return out


def sign_vector(sigma: Specialization) -> tuple[int, ...]:
    """Bits s_j with value_j = (-1)^(s_j), ordered by ascending assigned vertex."""
    if not sigma.is_unit:
        raise ValueError("sign vectors are defined for +/-1 specialisations only")
    return tuple(0 if v == 1 else 1 for _, v in sorted(sigma.assign.items()))


def enumeration_report(q: Quiver, include_vacuous: bool = False) -> list[dict]:
    """JSON-friendly view of enumerate_polyamorous."""
    entries = []
    for sigma in enumerate_polyamorous(q, include_vacuous=include_vacuous):
        entry = sigma.to_json()
        entry["unspecialised"] = sigma.unassigned(q)
        entry["vacuous"] = not sigma.unassigned(q)
        entries.append(entry)
    return entries

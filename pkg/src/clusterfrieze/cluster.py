"""Seeds, the exchange relation, and mutation closure.

A seed is a quiver together with an ordered cluster of Laurent polynomials,
one per vertex, all expressed in the variables of the initial cluster.
enumerate_seeds walks the mutation graph breadth-first, deduplicating seeds by
their unordered cluster, until it closes or a seed cap is reached.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .laurent import LaurentPoly
from .quiver import Quiver

DEFAULT_SEED_CAP = 10000


class InconsistentSeedError(RuntimeError):
    """Two seeds shared a cluster but their quivers do not match under any relabelling."""


@dataclass(frozen=True)
class Seed:
    quiver: Quiver
    cluster: tuple[LaurentPoly, ...]

    def __post_init__(self):
        if len(self.cluster) != self.quiver.n:
            raise ValueError(
                f"cluster has {len(self.cluster)} entries for {self.quiver.n} vertices"
            )
        for j, x in enumerate(self.cluster, start=1):
            if not isinstance(x, LaurentPoly) or x.is_zero():
                raise ValueError(f"cluster entry at vertex {j} must be a nonzero LaurentPoly")

    def variable(self, j: int) -> LaurentPoly:
        """Cluster variable at vertex j (1-indexed)."""
        return self.cluster[j - 1]

    def canonical_cluster(self) -> tuple[LaurentPoly, ...]:
        return tuple(sorted(self.cluster, key=LaurentPoly.sort_key))


def initial_seed(q: Quiver) -> Seed:
    return Seed(q, LaurentPoly.generators(q.n))


def exchange_binomial(s: Seed, j: int) -> LaurentPoly:
    """Product over arrows into j plus product over arrows out of j; empty products are 1."""
    b = s.quiver.b
    m = j - 1
    incoming = LaurentPoly.one(s.quiver.n)
    outgoing = LaurentPoly.one(s.quiver.n)
    for i in range(s.quiver.n):
        mult = b[i][m]
        if mult > 0:
            incoming = incoming * s.cluster[i] ** mult
        elif mult < 0:
            outgoing = outgoing * s.cluster[i] ** (-mult)
    return incoming + outgoing


def mutate_seed(s: Seed, j: int) -> Seed:
    """Mutate a seed at vertex j: the quiver mutates and the variable at j is exchanged.

    The division is exact for every seed reachable from an initial seed; a
    NotExactlyDivisible escaping from here means a bug, so it is never caught.
    """
    if not 1 <= j <= s.quiver.n:
        raise ValueError(f"vertex {j} out of range 1..{s.quiver.n}")
    new_var = exchange_binomial(s, j).exact_div(s.cluster[j - 1])
    cluster = list(s.cluster)
    cluster[j - 1] = new_var
    return Seed(s.quiver.mutate(j), tuple(cluster))


@dataclass(frozen=True)
class ClusterInventory:
    """Everything found by a mutation closure, in deterministic order."""

    variables: tuple[LaurentPoly, ...]
    clusters: tuple[tuple[LaurentPoly, ...], ...]
    seed_count: int
    truncated: bool

    def variable_count(self) -> int:
        return len(self.variables)

    def cluster_count(self) -> int:
        return len(self.clusters)

    def to_json(self) -> dict:
        index = {v: i for i, v in enumerate(self.variables)}
        return {
            "variable_count": len(self.variables),
            "cluster_count": len(self.clusters),
            "variables": [str(v) for v in self.variables],
            "clusters": [[index[v] for v in c] for c in self.clusters],
            "seed_count": self.seed_count,
            "truncated": self.truncated,
        }


def _match_seeds(stored: Seed, new: Seed) -> bool:
    """Is there a vertex relabelling matching both clusters and quiver matrices?"""
    n = stored.quiver.n
    groups: dict[LaurentPoly, list[int]] = {}
    for pos, v in enumerate(stored.cluster):
        groups.setdefault(v, []).append(pos)
    slots: list[list[int]] = []
    for v in new.cluster:
        if v not in groups:
            return False
        slots.append(groups[v])

    def candidates(prefix: tuple[int, ...], depth: int):
        if depth == n:
            yield prefix
            return
        for pos in slots[depth]:
            if pos not in prefix:
                yield from candidates(prefix + (pos,), depth + 1)

    for pi in candidates((), 0):
        if all(
            stored.quiver.b[pi[i]][pi[k]] == new.quiver.b[i][k]
            for i in range(n)
            for k in range(n)
        ):
            return True
    return False


def enumerate_seeds(q: Quiver, max_seeds: int = DEFAULT_SEED_CAP) -> ClusterInventory:
    """Breadth-first closure of the mutation graph from the initial seed.

    Seeds are deduplicated by their unordered cluster.  If a collision ever
    pairs quivers that do not match under the cluster relabelling, the walk
    aborts with InconsistentSeedError instead of silently merging them.
    Mutation-infinite quivers stop at max_seeds with truncated=True.
    """
    if max_seeds < 1:
        raise ValueError("max_seeds must be >= 1")
    start = initial_seed(q)
    seen: dict[tuple[LaurentPoly, ...], Seed] = {start.canonical_cluster(): start}
    queue: deque[Seed] = deque([start])
    truncated = False
    while queue and not truncated:
        seed = queue.popleft()
        for j in range(1, q.n + 1):
            neighbour = mutate_seed(seed, j)
            key = neighbour.canonical_cluster()
            known = seen.get(key)
            if known is not None:
                if not _match_seeds(known, neighbour):
                    raise InconsistentSeedError(
                        f"clusters coincide but quivers differ after mutating at {j}: "
                        f"{known.quiver.describe()} vs {neighbour.quiver.describe()}"
                    )
                continue
            if len(seen) >= max_seeds:
                truncated = True
                break
            seen[key] = neighbour
            queue.append(neighbour)

    variables = sorted({v for key in seen for v in key}, key=LaurentPoly.sort_key)
    clusters = sorted(seen.keys(), key=lambda c: tuple(v.sort_key() for v in c))
    return ClusterInventory(tuple(variables), tuple(clusters), len(seen), truncated)


def laurent_check(inv: ClusterInventory) -> bool:
    """Re-validate that an inventory holds only well-formed, normalized values.

    This is the belt-and-braces form of the Laurent-phenomenon check: by the
    time an inventory exists, no exchange division has failed, and everything
    in it must be a normalized integer Laurent polynomial.
    """
    try:
        pool = set()
        for v in inv.variables:
            if not isinstance(v, LaurentPoly):
                return False
            for exps, coeff in v.terms.items():
                if not isinstance(coeff, int) or coeff == 0:
                    return False
                if len(exps) != v.nvars or not all(isinstance(e, int) for e in exps):
                    return False
            pool.add(v)
        for cluster in inv.clusters:
            if any(v not in pool for v in cluster):
                return False
    except (TypeError, AttributeError):
        return False
    return True


def reachable_seeds(q: Quiver, depth: int, max_seeds: int = DEFAULT_SEED_CAP) -> list[Seed]:
    """All distinct seeds within a mutation distance, mainly for tests and demos."""
    start = initial_seed(q)
    seen = {start.canonical_cluster(): start}
    frontier = [start]
    for _ in range(depth):
        nxt: list[Seed] = []
        for seed in frontier:
            for j in range(1, q.n + 1):
                neighbour = mutate_seed(seed, j)
                key = neighbour.canonical_cluster()
                if key not in seen and len(seen) < max_seeds:
                    seen[key] = neighbour
                    nxt.append(neighbour)
        frontier = nxt
    return list(seen.values())

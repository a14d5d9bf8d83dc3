"""Polygon model, frieze construction/verification, and the two-row classification."""

from itertools import combinations, permutations

import pytest

from clusterfrieze.cluster import enumerate_seeds
from clusterfrieze.frieze import (
    Frieze,
    NotPolyamorous,
    PolygonLabelling,
    Triangulation,
    classify_two_row_friezes,
    frieze_from_labelling,
    fundamental_domain,
    quiver_of_triangulation,
    solve_polygon,
    symbolic_frieze,
    verify_frieze,
)
from clusterfrieze.laurent import LaurentPoly
from clusterfrieze.quiver import Quiver, linear_quiver
from clusterfrieze.specialize import Specialization

SNAKE_HEXAGON = Triangulation(3, ((0, 2), (2, 4), (0, 4)))


def cyclic_rotations(row):
    row = list(row)
    return [tuple(row[k:] + row[:k]) for k in range(len(row))]


def canonical_matrix(q):
    return min(
        tuple(tuple(q.b[p[i]][p[k]] for k in range(q.n)) for i in range(q.n))
        for p in permutations(range(q.n))
    )


def mutation_class(q, max_size=200):
    seen = {canonical_matrix(q)}
    frontier = [q]
    while frontier and len(seen) < max_size:
        nxt = []
        for cur in frontier:
            for j in range(1, cur.n + 1):
                mutated = cur.mutate(j)
                key = canonical_matrix(mutated)
                if key not in seen:
                    seen.add(key)
                    nxt.append(mutated)
        frontier = nxt
    return seen


def test_triangulation_validation():
    with pytest.raises(ValueError):
        Triangulation(2, ((0, 2), (1, 3)))  # crossing
    with pytest.raises(ValueError):
        Triangulation(2, ((0, 1), (0, 3)))  # edge
    with pytest.raises(ValueError):
        Triangulation(2, ((0, 2), (0, 2)))  # duplicate
    with pytest.raises(ValueError):
        Triangulation(2, ((0, 5), (0, 2)))  # out of range
    # sharing an endpoint is not a crossing
    Triangulation(3, ((0, 2), (2, 4), (0, 4)))


def test_fan_triangulations():
    assert Triangulation.fan(2).diagonals == ((0, 2), (0, 3))
    assert Triangulation.fan(3).diagonals == ((0, 2), (0, 3), (0, 4))
    assert Triangulation.fan(1, apex=1).diagonals == ((1, 3),)


def test_quiver_of_fan_triangulations():
    assert quiver_of_triangulation(Triangulation.fan(2)) == Quiver.from_arrows(2, [(1, 2, 1)])
    assert quiver_of_triangulation(Triangulation(1, ((0, 2),))) == Quiver.from_arrows(1, [])
    assert quiver_of_triangulation(Triangulation.fan(3)) == linear_quiver(3)


def test_quiver_of_snake_is_mutation_equivalent_to_a3():
    q = quiver_of_triangulation(SNAKE_HEXAGON)
    assert {frozenset((i, k)) for i, k, _ in q.arrows()} == {
        frozenset((1, 2)),
        frozenset((1, 3)),
        frozenset((2, 3)),
    }
    assert canonical_matrix(linear_quiver(3)) in mutation_class(q)


def test_solve_polygon_pentagon_fan():
    values = solve_polygon(Triangulation.fan(2)).values
    x1, x2 = LaurentPoly.generators(2)
    assert values[(0, 2)] == x1
    assert values[(0, 3)] == x2
    assert values[(1, 3)] == (1 + x2).exact_div(x1)
    assert values[(2, 4)] == (1 + x1).exact_div(x2)
    assert values[(1, 4)] == (1 + x1 + x2).exact_div(x1 * x2)


def test_solve_polygon_square():
    values = solve_polygon(Triangulation(1, ((0, 2),))).values
    assert values[(1, 3)] == LaurentPoly.monomial(1, (-1,), 2)


def test_solve_polygon_matches_cluster_enumeration():
    cases = [Triangulation.fan(n) for n in (2, 3, 4)] + [SNAKE_HEXAGON]
    for t in cases:
        labelling = solve_polygon(t)
        inv = enumerate_seeds(quiver_of_triangulation(t))
        assert set(labelling.values.values()) == set(inv.variables)


def ptolemy_holds(labelling):
    size = labelling.size
    for a, b, c, d in combinations(range(size), 4):
        lhs = labelling.value(a, c) * labelling.value(b, d)
        rhs = labelling.value(a, b) * labelling.value(c, d) + labelling.value(a, d) * labelling.value(b, c)
        if lhs != rhs:
            return False
    return True


def test_ptolemy_closure_exhaustive():
    for n in range(1, 6):
        assert ptolemy_holds(solve_polygon(Triangulation.fan(n)))
    assert ptolemy_holds(solve_polygon(SNAKE_HEXAGON))


def test_symbolic_frieze_passes_all_checks():
    for n in (1, 2, 3, 4):
        report = verify_frieze(symbolic_frieze(solve_polygon(Triangulation.fan(n))))
        assert report.all_ok(), (n, report)
    assert verify_frieze(symbolic_frieze(solve_polygon(SNAKE_HEXAGON))).all_ok()


def test_conway_coxeter_frieze():
    labelling = solve_polygon(Triangulation.fan(2))
    f = frieze_from_labelling(labelling, Specialization({1: 1, 2: 1}), {})
    assert f.rows[0] in cyclic_rotations((2, 2, 1, 3, 1))
    assert f.rows[1] in cyclic_rotations((3, 1, 2, 2, 1))
    assert verify_frieze(f).all_ok()


def test_zero_family_friezes():
    labelling = solve_polygon(Triangulation.fan(2))
    for t in range(-3, 4):
        f = frieze_from_labelling(labelling, Specialization({2: -1}), {1: t})
        assert f.rows[0] in cyclic_rotations((-1 - t, 0, t, -1, -1)), (t, f.rows[0])
        assert f.rows[1] in cyclic_rotations((-1, -1, -1 - t, 0, t)), (t, f.rows[1])
        assert verify_frieze(f).all_ok()


def test_frieze_rejects_non_polyamorous_sigma():
    labelling = solve_polygon(Triangulation.fan(2))
    with pytest.raises(NotPolyamorous):
        frieze_from_labelling(labelling, Specialization({2: 1}), {1: 3})


def test_frieze_rejects_partial_assignment():
    labelling = solve_polygon(Triangulation.fan(2))
    with pytest.raises(ValueError):
        frieze_from_labelling(labelling, Specialization({2: -1}), {})
    with pytest.raises(ValueError):
        frieze_from_labelling(labelling, Specialization({2: -1}), {1: 1, 2: 1})


def test_verify_flags_perturbations():
    labelling = solve_polygon(Triangulation.fan(2))
    f = frieze_from_labelling(labelling, Specialization({1: 1, 2: 1}), {})
    rows = [list(r) for r in f.rows]
    where = rows[0].index(3)
    rows[0][where] = 4
    report = verify_frieze(Frieze(2, tuple(tuple(r) for r in rows)))
    assert not report.diamond_ok
    assert report.diamond_violation is not None
    broken_glide = [list(r) for r in f.rows]
    broken_glide[0][0], broken_glide[0][1] = broken_glide[0][1], broken_glide[0][0]
    report = verify_frieze(Frieze(2, tuple(tuple(r) for r in broken_glide)))
    assert not report.all_ok()


def test_fundamental_domain_matches_arranged_cluster_variables():
    x1, x2 = LaurentPoly.generators(2)
    expected = [
        (1 + x2).exact_div(x1),
        x1,
        (1 + x1 + x2).exact_div(x1 * x2),
        x2,
        (1 + x1).exact_div(x2),
    ]
    assert fundamental_domain(solve_polygon(Triangulation.fan(2))) == expected


def test_fundamental_domain_sizes():
    for n, size in ((1, 2), (2, 5), (3, 9)):
        assert len(fundamental_domain(solve_polygon(Triangulation.fan(n)))) == size


def test_fundamental_domain_covers_every_diagonal_once():
    for n in range(1, 7):
        labelling = solve_polygon(Triangulation.fan(n))
        domain = fundamental_domain(labelling)
        all_diagonals = sorted(labelling.values.values(), key=LaurentPoly.sort_key)
        assert sorted(domain, key=LaurentPoly.sort_key) == all_diagonals


def test_glide_checked_from_entries_not_construction():
    labelling = solve_polygon(Triangulation.fan(3))
    f = frieze_from_labelling(labelling, Specialization({2: -1}), {1: 2, 3: 5})
    for d in range(1, f.n + 1):
        for i in range(f.period):
            assert f.entry(d, i) == f.entry(f.n + 1 - d, i + d + 1)


def test_classification_small_bound():
    result = classify_two_row_friezes(3)
    assert not result.unexplained
    assert len(result.positive) == 5  # the positive frieze and its four translates
    assert result.solutions


def test_classification_positive_solutions_are_translates():
    result = classify_two_row_friezes(6)
    assert not result.unexplained
    positives = [s for s in result.solutions if all(v > 0 for v in s)]
    assert sorted(positives) == sorted(result.positive)
    assert len(positives) == 5


def test_classification_bound_guard():
    with pytest.raises(ValueError):
        classify_two_row_friezes(2)


def test_triangulation_json_round_trip(tmp_path):
    t = SNAKE_HEXAGON
    path = tmp_path / "t.json"
    path.write_text(__import__("json").dumps(t.to_json()))
    assert Triangulation.load(path) == t
    with pytest.raises(ValueError):
        Triangulation.from_json({"n": 2, "diagonals": [[0, 2]]})


def test_frieze_json():
    labelling = solve_polygon(Triangulation.fan(2))
    f = frieze_from_labelling(labelling, Specialization({1: 1, 2: 1}), {})
    data = f.to_json()
    assert data["n"] == 2 and data["period"] == 5
    assert len(data["rows"]) == 2 and all(len(r) == 5 for r in data["rows"])
    with pytest.raises(ValueError):
        symbolic_frieze(labelling).to_json()

import pytest

from latlab import (EdgeLabeling, FamilySpec, Graph, ParameterError, SolveBudget,
                    TooLargeError, TotalLabeling, brute_force_min_distinct,
                    find_with_at_most_k, generate, iter_valid_labelings,
                    solve_min_distinct, verify_edge, verify_total)
from latlab.solver import SearchMode, _slot_order

QUICK = SolveBudget(max_nodes=50_000_000, max_millis=120_000)


def fam(kind, *params):
    return generate(FamilySpec(kind, params))


# connected graphs on <= 4 vertices, one per isomorphism class
CONNECTED_SMALL = {
    "K1": Graph(1, ()),
    "K2": Graph.from_edges(2, [(0, 1)]),
    "P3": Graph.from_edges(3, [(0, 1), (1, 2)]),
    "K3": Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)]),
    "P4": Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]),
    "star4": Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]),
    "paw": Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]),
    "C4": Graph.from_edges(4, [(0, 1), (0, 3), (1, 2), (2, 3)]),
    "diamond": Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    "K4": Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
}


class TestBudget:
    def test_requires_a_finite_limit(self):
        with pytest.raises(ParameterError):
            SolveBudget()
        with pytest.raises(ParameterError):
            SolveBudget(max_nodes=0)

    def test_exhaustion_reports_not_wrong(self):
        res = solve_min_distinct(fam("cycle", 7), "total", SolveBudget(max_nodes=50))
        assert res.status in ("exhausted", "lower_upper")


class TestBruteForce:
    def test_c3_total(self):
        assert brute_force_min_distinct(fam("cycle", 3), "total").value == 3

    def test_p2_total(self):
        assert brute_force_min_distinct(fam("path", 2), "total").value == 2

    def test_k2_edge_infeasible(self):
        assert brute_force_min_distinct(fam("complete", 2), "edge").status == "infeasible"

    def test_refuses_large_universe(self):
        with pytest.raises(TooLargeError):
            brute_force_min_distinct(fam("cycle", 6), "total")  # universe 12

    def test_certificate_is_verified_witness(self):
        res = brute_force_min_distinct(fam("cycle", 4), "total")
        report = verify_total(fam("cycle", 4), res.certificate)
        assert report.valid
        assert report.profile.distinct_count == res.value == 2

    def test_empty_graphs(self):
        assert brute_force_min_distinct(Graph(0, ()), "total").value == 0
        assert brute_force_min_distinct(fam("empty", 3), "total").value == 3
        assert brute_force_min_distinct(fam("empty", 3), "edge").value == 1


class TestSolve:
    @pytest.mark.parametrize("kind,n,expected", [
        ("cycle", 4, 2), ("cycle", 5, 3), ("path", 4, 3), ("path", 3, 2),
    ])
    def test_known_small_values(self, kind, n, expected):
        res = solve_min_distinct(fam(kind, n), "total", QUICK)
        assert res.status == "exact" and res.value == expected

    def test_oracle_agreement_connected(self):
        for name, g in CONNECTED_SMALL.items():
            for mode in (SearchMode.TOTAL, SearchMode.EDGE):
                universe = g.p + g.q if mode is SearchMode.TOTAL else g.q
                if universe > 9:
                    continue
                oracle = brute_force_min_distinct(g, mode)
                ours = solve_min_distinct(g, mode, QUICK)
                assert ours.status == oracle.status, (name, mode)
                assert ours.value == oracle.value, (name, mode)

    def test_oracle_agreement_families(self):
        specs = [FamilySpec("cycle", (3,)), FamilySpec("cycle", (4,)),
                 FamilySpec("path", (4,)), FamilySpec("complete", (3,)),
                 FamilySpec("complete_bipartite", (2, 2)), FamilySpec("empty", (4,)),
                 FamilySpec("k2_plus_empty", (2,))]
        for spec in specs:
            g = generate(spec)
            for mode in (SearchMode.TOTAL, SearchMode.EDGE):
                universe = g.p + g.q if mode is SearchMode.TOTAL else g.q
                if universe > 9:
                    continue
                oracle = brute_force_min_distinct(g, mode)
                ours = solve_min_distinct(g, mode, QUICK, family=spec)
                assert (ours.status, ours.value) == (oracle.status, oracle.value), spec

    def test_lower_bound_safety(self):
        from latlab import chi_lat_lower_bound
        for g in CONNECTED_SMALL.values():
            res = solve_min_distinct(g, "total", QUICK)
            assert res.value >= chi_lat_lower_bound(g)

    def test_determinism(self):
        g = fam("cycle", 5)
        a = solve_min_distinct(g, "total", QUICK)
        b = solve_min_distinct(g, "total", QUICK)
        assert a == b

    def test_pruning_differential(self):
        for g in [fam("cycle", 3), fam("path", 3), fam("path", 4),
                  fam("complete", 3), fam("k2_plus_empty", 2)]:
            pruned = solve_min_distinct(g, "total", QUICK)
            plain = solve_min_distinct(g, "total", QUICK, pruning=False)
            assert pruned.value == plain.value

    def test_symmetry_breaking_preserves_value(self):
        spec = FamilySpec("cycle", (4,))
        g = generate(spec)
        with_sym = solve_min_distinct(g, "total", QUICK, family=spec)
        without = solve_min_distinct(g, "total", QUICK)
        assert with_sym.value == without.value == 2

    def test_isolated_edge_infeasible_edge_mode(self):
        g = fam("k2_plus_empty", 3)
        assert solve_min_distinct(g, "edge", QUICK).status == "infeasible"


class TestFindWithAtMostK:
    def test_c4_at_2(self):
        res = find_with_at_most_k(fam("cycle", 4), 2, "total", QUICK)
        assert res.status == "found"
        report = verify_total(fam("cycle", 4), res.certificate)
        assert report.valid and report.profile.distinct_count <= 2

    def test_c3_at_2_definitively_none(self):
        assert find_with_at_most_k(fam("cycle", 3), 2, "total", QUICK).status == "none"

    def test_p7_at_2(self):
        res = find_with_at_most_k(fam("path", 7), 2, "total", QUICK)
        assert res.status == "found"

    def test_unknown_on_tiny_budget(self):
        res = find_with_at_most_k(fam("cycle", 7), 2, "total", SolveBudget(max_nodes=5))
        assert res.status == "unknown"

    def test_k_validation(self):
        with pytest.raises(ParameterError):
            find_with_at_most_k(fam("cycle", 3), 0, "total", QUICK)


class TestIterValidLabelings:
    def test_all_distinct_and_valid(self):
        k4 = fam("complete", 4)
        labs = iter_valid_labelings(k4, "edge", 30)
        assert len(labs) == 30
        assert len(set(labs)) == 30
        for lab in labs:
            assert verify_edge(k4, lab).valid


def test_slot_order_is_a_permutation():
    for g in CONNECTED_SMALL.values():
        for mode in (SearchMode.TOTAL, SearchMode.EDGE):
            n = g.p + g.q if mode is SearchMode.TOTAL else g.q
            assert sorted(_slot_order(g, mode)) == list(range(n))

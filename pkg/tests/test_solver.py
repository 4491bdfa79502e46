import pytest

from gpid import (
    BoundsOnly,
    SolveResult,
    build_petersen,
    construct_pn2,
    construct_pnk,
    degree_lower_bound,
    solve_branch_and_bound,
    solve_dp,
    solve_exhaustive,
    validate_2rdf,
    validate_dominating,
    validate_idf,
    weight,
)
from gpid.errors import BudgetExceeded, InvalidParameters
from gpid.solver import greedy_labeling, repair_idf

from conftest import oracle_adjacency, oracle_is_idf


def test_exhaustive_examples():
    assert solve_exhaustive(build_petersen(3, 1), "italian").optimum == 3
    assert solve_exhaustive(build_petersen(5, 2), "italian").optimum == 4
    assert solve_exhaustive(build_petersen(6, 2), "domination").optimum == 4


def test_exhaustive_size_gates():
    with pytest.raises(BudgetExceeded):
        solve_exhaustive(build_petersen(9, 1), "italian")
    with pytest.raises(BudgetExceeded):
        solve_exhaustive(build_petersen(7, 1), "rainbow2")


def test_dp_examples():
    assert solve_dp(10, 1, "italian").optimum == 10
    assert solve_dp(7, 2, "italian").optimum == 7
    assert solve_dp(5, 2, "rainbow2").optimum == 5


def test_dp_rejects_large_k():
    with pytest.raises(InvalidParameters):
        solve_dp(15, 4, "italian")
    with pytest.raises(InvalidParameters):
        solve_dp(5, 2, "roman")


def test_dp_equals_exhaustive_spot():
    for n, k, kind in [(6, 1, "italian"), (7, 2, "domination"), (7, 3, "italian"),
                       (5, 2, "rainbow2"), (6, 1, "rainbow2")]:
        a = solve_dp(n, k, kind)
        b = solve_exhaustive(build_petersen(n, k), kind)
        assert a.optimum == b.optimum, (n, k, kind)


def test_dp_witness_is_lex_min():
    """Both exact routes break ties to the lexicographically smallest
    optimal label vector, so their witnesses agree exactly."""
    for n, k, kind in [(5, 1, "italian"), (6, 2, "italian"), (5, 2, "domination"),
                       (5, 2, "rainbow2")]:
        a = solve_dp(n, k, kind)
        b = solve_exhaustive(build_petersen(n, k), kind)
        wa = a.witness if isinstance(a.witness, tuple) else a.witness.values
        wb = b.witness if isinstance(b.witness, tuple) else b.witness.values
        assert wa == wb, (n, k, kind)


def test_witness_soundness():
    r = solve_dp(9, 2, "italian")
    assert validate_idf(r.witness).valid
    assert weight(r.witness) == r.optimum
    r = solve_dp(8, 1, "rainbow2")
    assert validate_2rdf(r.witness).valid
    assert weight(r.witness) == r.optimum
    r = solve_dp(8, 2, "domination")
    assert validate_dominating(build_petersen(8, 2), r.witness).valid
    assert len(r.witness) == r.optimum


def test_dp_determinism():
    from gpid.dp import solve_cycle

    a = solve_cycle(9, 2, "italian")
    b = solve_cycle(9, 2, "italian")
    assert a[:2] == b[:2]


def test_dp_state_decode():
    from gpid.dp import decode_state

    st = decode_state(2, (1, 0, 0, 2, 1, 0), (0, 2, 0), 5)
    assert st.position == 5
    assert st.inner_window == ((1, 0), (0, 2))
    assert st.outer == (1, 0)
    assert st.wrap_residuals == (0, 2, 0)


def test_degree_lower_bound_examples():
    assert degree_lower_bound(build_petersen(10, 3)) == 8
    assert degree_lower_bound(build_petersen(7, 2)) == 6
    assert degree_lower_bound(build_petersen(15, 7)) == 12


def test_bnb_exact_small():
    r = solve_branch_and_bound(build_petersen(5, 2), "italian", budget=10**6)
    assert isinstance(r, SolveResult)
    assert r.optimum == 4


def test_bnb_seeded_certifies_p15_7():
    c = construct_pnk(15, 7)
    g = build_petersen(15, 7)
    r = solve_branch_and_bound(g, "italian", budget=5000, initial=c.labeling.values)
    if isinstance(r, SolveResult):
        assert r.optimum == 12
    else:
        assert r.lo == 12 and r.hi == 12


def test_bnb_budget_zero_degenerates_to_bounds():
    g = build_petersen(10, 3)
    r = solve_branch_and_bound(g, "italian", budget=0)
    assert isinstance(r, BoundsOnly)
    assert r.lo == degree_lower_bound(g)
    assert r.lo <= r.hi <= 2 * g.num_vertices
    assert validate_idf(r.incumbent).valid


def test_bnb_matches_dp_all_kinds():
    for kind in ("italian", "domination", "rainbow2"):
        r = solve_branch_and_bound(build_petersen(6, 2), kind, budget=10**7)
        assert isinstance(r, SolveResult)
        assert r.optimum == solve_dp(6, 2, kind).optimum


def test_bnb_matches_dp_k3_beyond_exhaustive_gate():
    for n, kind in [(9, "italian"), (10, "italian"), (11, "domination")]:
        r = solve_branch_and_bound(build_petersen(n, 3), kind, budget=2 * 10**7)
        assert isinstance(r, SolveResult)
        assert r.optimum == solve_dp(n, 3, kind).optimum


def test_invariant_chain_small():
    """degree bound <= gamma_I <= construction weight; gamma_I <= gamma_r2;
    gamma_I <= 2 gamma on every solved instance."""
    for n, k in [(5, 2), (8, 2), (10, 2), (7, 1), (12, 1)]:
        g = build_petersen(n, k)
        gi = solve_dp(n, k, "italian").optimum
        r2 = solve_dp(n, k, "rainbow2").optimum
        dom = solve_dp(n, k, "domination").optimum
        assert degree_lower_bound(g) <= gi <= r2
        assert gi <= 2 * dom
        if k == 2 and n % 10 in (0, 5, 8):
            assert gi <= construct_pn2(n).actual_weight


def test_greedy_labelings_are_valid():
    for kind in ("italian", "domination", "rainbow2"):
        g = build_petersen(9, 3)
        vals = greedy_labeling(g, kind)
        adj = oracle_adjacency(9, 3)
        if kind == "italian":
            assert oracle_is_idf(adj, vals)
        elif kind == "domination":
            chosen = {v for v, x in enumerate(vals) if x}
            assert all(v in chosen or chosen & adj[v] for v in range(18))


def test_repair_fixes_arbitrary_labelings():
    g = build_petersen(9, 4)
    adj = oracle_adjacency(9, 4)
    repaired = repair_idf(g, (0,) * 18)
    assert oracle_is_idf(adj, repaired)
    already = construct_pnk(20, 8).labeling.values
    assert repair_idf(build_petersen(20, 8), already) == already


def test_result_json_shapes():
    r = solve_dp(6, 2, "domination")
    d = r.to_json_dict()
    assert d["invariant"] == "domination" and sorted(d["witness"]["set"]) == list(
        d["witness"]["set"]
    )
    r = solve_dp(5, 2, "rainbow2")
    d = r.to_json_dict()
    assert set(d["witness"]["values"]) <= {"0", "1", "2", "12"}
    b = solve_branch_and_bound(build_petersen(12, 5), "italian", budget=10)
    assert isinstance(b, BoundsOnly)
    d = b.to_json_dict()
    assert d["lo"] <= d["hi"]

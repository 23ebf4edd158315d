import os
import subprocess

import pytest

import commgraph as cg


def test_parse_group():
    g = cg.parse_group("z2Xz6")
    assert g.spec == "Z2xZ6"
    assert (g.order, g.two_rank, g.involution_count) == (12, 2, 4)
    assert cg.AbelianGroup([6]).two_rank == cg.parse_group("Z2xZ3").two_rank


def test_errors_are_value_errors():
    with pytest.raises(ValueError, match="Q8"):
        cg.parse_group("Q8")
    with pytest.raises(cg.CommgraphError):
        cg.edge_count_formula(4, 2)
    with pytest.raises(ValueError):
        cg.detour_ecc_formula(6, 1, "omega4")


def test_graph_matches_structure():
    g = cg.commuting_graph("Z6")
    assert g.vertex_count == 12
    assert g.labels[:2] == ["(0;+)", "(3;+)"]
    assert g.parts.count("omega3") == 6
    assert len(g.edges()) == g.edge_count() == 30
    assert g == cg.structural_graph(6, 1)
    assert sorted({g.degree(v) for v in range(12)}) == [3, 5, 11]


def test_formulas_against_oracles():
    g = cg.commuting_graph("Z2xZ4")
    assert cg.chromatic_number_oracle(g) == cg.chromatic_number_formula(8, 2) == 8
    profile = cg.detour_profile(g)
    assert (profile["radius"], profile["diameter"]) == cg.detour_radius_diameter_formula(8, 2)
    beta, witness = cg.metric_dimension_oracle(g)
    assert beta == len(witness) == cg.metric_dimension_formula(8, 2) == 12
    assert cg.resolving_polynomial_oracle(g) == cg.resolving_polynomial_formula(8, 2)


def test_small_polynomials():
    assert cg.resolving_polynomial_formula(3, 0) == {3: 6, 4: 11, 5: 6, 6: 1}
    assert cg.resolving_polynomial_formula(4, 1) == {4: 16, 5: 32, 6: 24, 7: 8, 8: 1}
    assert cg.resolving_polynomial_formula(6, 1)[7] == 64


def test_big_totals_are_python_ints():
    total = cg.resolving_set_total_formula(1 << 20, 1)
    assert isinstance(total, int)
    n, c = 1 << 20, 2
    assert total == (n - c + 1) * (c + 1) ** (n // c + 1)


def test_report_and_sweep():
    rep = cg.report("Z6")
    assert rep["edges"] == {"formula": 30, "oracle": 30, "agree": True}
    assert rep["agree_all"] is True
    assert cg.report("Z2xZ2")["graph"] == "K_8"
    rows = cg.sweep("all-abelian", 9)
    assert len(rows) == 15
    assert not any(r["agree_all"] is False for r in rows)
    mutated = cg.sweep("Z3,Z4", inject="chromatic")
    assert all(r["agree_all"] is False for r in mutated)
    assert "witness" in mutated[0]["disagreements"][0]
    assert set(cg.mutation_targets()) >= {"edges", "resolving-total"}


@pytest.mark.skipif("COMMGRAPH_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes(tmp_path):
    cli = os.environ["COMMGRAPH_CLI"]
    env = dict(os.environ, COMMGRAPH_CACHE=str(tmp_path / "cache.jsonl"))
    ok = subprocess.run([cli, "report", "Z4", "--json"], capture_output=True, env=env)
    assert ok.returncode == 0
    bad = subprocess.run([cli, "sweep", "Z3", "--inject-off-by-one", "edges"],
                         capture_output=True, env=env)
    assert bad.returncode == 2
    assert b"DISAGREE Z3 edges" in bad.stderr

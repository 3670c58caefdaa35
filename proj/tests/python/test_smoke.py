import json

import pytest

import griddom


def covers(m, n, k, vertices):
    return all(
        any(abs(x - a) + abs(y - b) <= k for a, b in vertices)
        for x in range(1, m + 1)
        for y in range(1, n + 1)
    )


def test_construct_dominates_within_bound():
    c = griddom.construct(10, 15)
    assert len(c["vertices"]) <= 41
    assert covers(10, 15, 1, c["vertices"])
    assert c["repaired"] == []
    assert griddom.verify(10, 15, c["vertices"])["dominated"]


def test_construct_best_and_formula():
    best = griddom.construct_best(16, 16)
    assert len(best["vertices"]) - griddom.gamma_formula(16, 16) <= 5
    with pytest.raises(griddom.FormulaNotApplicable):
        griddom.gamma_formula(5, 5)
    with pytest.raises(ValueError):
        griddom.gamma_formula(5, 5)


def test_bounds():
    b = griddom.bounds(16, 16, k=2)
    assert b["lower"] == 20
    assert b["construction_upper"] == 35
    assert b["gamma_exact_formula"] is None
    assert tuple(griddom.bounds(10, 15)["ratio_upper"]) == (41, 30)


def test_exact_and_budget():
    r = griddom.exact(4, 4)
    assert r["gamma"] == 4
    assert covers(4, 4, 1, r["vertices"])
    with pytest.raises(griddom.BudgetExhausted) as info:
        griddom.exact(6, 6, max_nodes=1)
    assert info.value.best_upper_bound >= 10
    assert info.value.proven_lower_bound <= 10


def test_greedy():
    assert griddom.greedy_worst_case_formula(9, 9) == 27
    adv = griddom.greedy(9, 9, tie_break="adversarial")
    assert len(adv) >= 27
    assert covers(9, 9, 1, adv)
    assert griddom.greedy(7, 7, "random", seed=3) == griddom.greedy(7, 7, "random", seed=3)
    with pytest.raises(ValueError):
        griddom.greedy(4, 4, "random")


def test_simulate():
    r = griddom.simulate(10, 15, agents=41, seed=7)
    assert r["dominated"]
    assert covers(10, 15, 1, r["cluster"] + r["orphans"])
    lines = r["trace"].splitlines()
    assert json.loads(lines[0])["kind"] == "ACTIVATED"
    assert json.loads(lines[-1])["kind"] in {"HALTED", "LEFT_GRID"}


def test_render():
    assert griddom.render(3, 3, [(2, 2)]) == "!.!\n.D.\n!.!"
    assert griddom.render(1, 1, [(1, 1)], style="svg").startswith("<svg")

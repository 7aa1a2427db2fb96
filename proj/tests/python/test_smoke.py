import json
import pathlib

import fairflow

DATA = pathlib.Path(__file__).resolve().parents[1] / "data"


def test_check_feasible_from_path():
    r = fairflow.check(DATA / "i1.json")
    assert r.ok
    assert r.report["feasible"] is True


def test_check_infeasible():
    r = fairflow.check(DATA / "i1_infeasible.json")
    assert r.exit_code == fairflow.EXIT_INFEASIBLE
    assert r.report["violator"] == ["b"]


def test_solve_dict_input():
    doc = json.loads((DATA / "i6.json").read_text())
    r = fairflow.solve(doc, trace=True)
    assert r.ok
    assert r.report["witness"] == {"e1": 1, "e2": 1}
    assert r.report["traces"]


def test_solve_min_cost():
    r = fairflow.solve(DATA / "i1_free_arc.json", min_cost=True)
    assert r.ok
    assert r.report["cost"] == -2


def test_no_decmin():
    r = fairflow.solve(DATA / "i4_prime.json")
    assert r.exit_code == fairflow.EXIT_NO_DECMIN
    assert r.report["dec_min_exists"] is False


def test_orient():
    r = fairflow.orient(DATA / "k4.json")
    assert r.ok
    assert r.report["profile"] == [2, 2, 1, 1]
    assert fairflow.orient(DATA / "triangle.json", k=2).exit_code == fairflow.EXIT_INFEASIBLE


def test_verify_and_input_errors():
    assert fairflow.verify(DATA / "i6.json").ok
    assert fairflow.verify(DATA / "i1_free_arc.json", budget=3).exit_code == fairflow.EXIT_INPUT
    assert fairflow.check("{").exit_code == fairflow.EXIT_INPUT

from src.graph.builder import (
    build_example21_graph,
    build_perturbation_graph,
    presentation_ok,
    should_raise_power,
)
from src.graph.nodes import run_certify, run_raise_power
from src.main import compute_relation_type, replicate_example21, run_perturbation

POLY2 = "char 32003\nvars x,y\n"


def test_should_raise_power_routes():
    assert should_raise_power({"certified": False, "power": 1, "max_power": 3}) == "raise"
    assert should_raise_power({"certified": False, "power": 3, "max_power": 3}) == "compare"
    assert should_raise_power({"certified": True, "power": 1, "max_power": 3}) == "compare"


def test_presentation_ok_routes():
    assert presentation_ok({"bad_relations": []}) == "continue"
    assert presentation_ok({"bad_relations": ["x*T1"], "error": "boom"}) == "end"


def test_raise_power_keeps_other_keys():
    state = run_raise_power({"power": 2, "index": 3})
    assert state == {"power": 3, "index": 3}


def test_certify_node_raises_the_multiplier(cm_failure_ring):
    R = cm_failure_ring
    sop = [R("x"), R("y"), R("z + w")]
    state = run_certify({"ring": R, "sop": sop, "alpha": R("w"), "index": 3, "power": 2})
    assert state["certified"] is True
    assert state["certificates"][0]["z"] == "w^2"
    assert state["certificates"][0]["degenerate"] is True


def test_example_family_graph():
    final_state = build_example21_graph().invoke({"n": 2, "m": 2, "prime": 32003, "error": None})
    output = final_state["final_output"]
    assert output["n"] == 2
    assert output["prime"] == 32003
    assert output["rt"] >= 2
    assert output["irreducible"] is True
    assert output["relation"] == "w*T1^2 - w*T2*T3"


def test_perturbation_graph_in_a_polynomial_ring(poly2):
    R = poly2
    final_state = build_perturbation_graph().invoke(
        {
            "ring": R,
            "sop": [R("x"), R("y")],
            "alpha": R("x^2"),
            "index": 1,
            "max_power": 3,
            "power": 1,
            "error": None,
        }
    )
    output = final_state["final_output"]
    assert output["certified"] is True
    assert output["power"] == 1
    assert output["rt_x"] == output["rt_y"] == 1
    assert len(output["certificates"]) == 2


def test_compute_relation_type():
    result = compute_relation_type(POLY2, "x^2, x*y, y^2")
    assert result["rt"] == 2
    assert {r["degree"] for r in result["relations"]} == {1, 2}


def test_compute_relation_type_errors():
    assert compute_relation_type("", "x")["exit_code"] == 2
    assert compute_relation_type(POLY2, "q")["exit_code"] == 2
    assert compute_relation_type("char 4\nvars x\n", "x")["exit_code"] == 2


def test_replicate_and_perturb_entry_points():
    family = replicate_example21(2)
    assert family["rt_at_least_n"] is True
    assert replicate_example21(0)["exit_code"] == 3

    report = run_perturbation(POLY2, "x, y", "x^2", 1)
    assert report["equal"] is True
    assert run_perturbation(POLY2, "x", "x^2", 1)["exit_code"] == 3

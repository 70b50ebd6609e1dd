"""Smoke test for the pyjohan extension.

Build and install first, e.g.

    pip install maturin
    maturin build --release -o dist && pip install dist/pyjohan-*.whl
"""

import json

import pyjohan as pj


def main():
    c6 = pj.Graph.family("cycle:6")
    assert (c6.order, c6.size) == (6, 6)
    assert pj.j_number(c6) == 3
    assert pj.j_number(pj.Graph.family("cycle:5")) is None

    p5 = pj.Graph.family("path:5")
    assert (pj.j_number(p5), pj.j_star_number(p5)) == (2, 3)

    star = pj.Graph.family("star:4")
    assert pj.j_star_number(star) == 5

    prof = pj.j_profile(c6)
    assert prof.admits() and prof.feasible_k == [2, 3]
    assert pj.validate_witness(c6, prof.witnesses[3], 3)

    chi, col = pj.chromatic_number(pj.Graph.family("complete:4"))
    assert chi == 4 and pj.is_proper(pj.Graph.family("complete:4"), col)

    k3 = pj.Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert k3.to_graph6() == "Bw"
    assert pj.Graph.from_graph6("Bw") == k3
    assert pj.derive(k3, "line") == k3
    assert pj.combine(pj.Graph.family("path:3"), pj.Graph.family("cycle:4"), "cartesian").order == 12

    k4 = pj.Graph.family("complete:4")
    count, witness = pj.r_minus(k4, 3)
    assert count == 1 and len(witness) == 1
    assert pj.r_plus(k4, 2, "plain")[0] == 4

    removed, j = pj.minimal_repair(pj.Graph.family("cycle:5"))
    assert len(removed) == 1 and j == 2

    t = pj.tree_jstar_colouring(pj.Graph(4, [(0, 1), (1, 2), (1, 3)]))
    assert max(t) == 3

    try:
        pj.j_number(pj.Graph.family("cycle:13"))
    except pj.ScaleExceeded:
        pass
    else:
        raise AssertionError("expected ScaleExceeded")

    try:
        pj.Graph(3, [(0, 0)])
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for a self-loop")

    cfg = json.loads(pj.default_config())
    cfg["product_factors"] = ["path:3", "complete:3"]
    cfg["random_graphs"]["count"] = 5
    report = json.loads(pj.verify(json.dumps(cfg)))
    assert report["summary"]["missing_claims"] == []
    assert report["summary"]["hard_failures"] == 0

    print("pyjohan smoke test passed")


if __name__ == "__main__":
    main()

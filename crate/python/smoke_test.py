"""Smoke test for the cubicplane extension module.

Build and install first:  pip install --no-build-isolation -e crates/python
"""

import cubicplane as cp


def main():
    assert len(cp.example_names()) == 7

    ex = cp.build_example("ex42ii")
    report = cp.analyze(ex.rep)
    assert ex.mismatches(report) == []
    d = report.as_dict()
    assert d["s_c_count"] == 3 and d["b_count"] == 0
    assert report.smooth is False
    assert report.sing_x == ["(1:-1/5:-1/5:0:0:0)", "(1:-2:1:0:0:0)", "(1:1:-2:0:0:0)"]

    reduced = ex.rep.reduce("fp:7")
    assert sorted(cp.oracle(ex.rep, 7)) == cp.analyze(reduced).sing_x

    rep = cp.SymDetRep.parse(cp.build_example("prop44").rep.to_repfile())
    r = cp.analyze(rep)
    assert r.smooth is True and r.as_dict()["ns2_rank_lower_bound"] == 14

    rows = [["x1", "0", "0", "0"], ["0", "x2", "0", "0"], ["0", "0", "x3", "0"],
            ["0", "0", "0", "(x2 - x3)^2*x3 - (x1 - x3)^3"]]
    try:
        cp.analyze(cp.SymDetRep(rows))
    except ValueError as e:
        assert "nodal" in str(e)
    else:
        raise AssertionError("cuspidal sextic accepted")

    try:
        cp.SymDetRep([["x1", "x2", "0", "0"]] + rows[1:])
    except ValueError as e:
        assert "symmetric" in str(e)
    else:
        raise AssertionError("asymmetric matrix accepted")

    assert cp.theta_counts(10) == (1048576, 524800, 523776)
    assert cp.spin_subsets("lines=6", 10)[0]["residual_even"]
    assert cp.config_predicates("line,quintic:nodes=5")["in_remark41_list"]
    g = cp.ns2_gram(12)
    assert g["class_count"] == 25 and g["det"] == 32768 and len(g["gram"]) == 14

    print("smoke test passed")


if __name__ == "__main__":
    main()

"""Smoke test for the pydiffalg extension.

Build and run from the repository root:

    cargo build -p pydiffalg --features extension-module
    cp target/debug/libpydiffalg.so target/debug/pydiffalg.so
    PYTHONPATH=target/debug python3 crates/py/python/smoke_test.py
"""

import json

import pydiffalg as d


def main():
    # Shifts compose additively and D_a = [a] - [0].
    a = d.GroupRingElement.shift([1, 0])
    b = d.GroupRingElement.shift([0, 2])
    assert a * b == d.GroupRingElement.shift([1, 2])
    assert d.GroupRingElement.delta([1, 0]).terms() == [([0, 0], -1), ([1, 0], 1)]
    assert str(d.GroupRingElement.delta([2, 1]) ** 0) == "1*[(0,0)]"

    # Binomials are exact at any size.
    assert d.binom(-1, 3) == -1
    assert d.binom(10**30, 2) == 10**30 * (10**30 - 1) // 2

    # x^2 in the binomial basis, and its second difference.
    p = d.Polyfract.parse("x1^2", 1)
    assert p.terms() == [([1], 1), ([2], 2)]
    assert p.count() == 2
    assert p.delta_standard([2]).terms() == [([0], 2)]
    f = d.Polyfract(1, [([3], 1)])
    assert d.GroupRingElement.word_operator([[1], [1]]).apply(f, [1]) == 1

    grouped = json.loads(d.expand_word_grouped([[2, 1]]))
    assert [t["q"] for t in grouped] == [[0, 1], [1, 0]]

    t = d.cyclic_factor([2], [1])
    assert t.terms() == [([0], 1), ([1], 1)]

    xy = d.Polyfract.parse("x1*x2", 2)
    assert d.fdeg_standard(xy) == 2
    report = json.loads(d.fdeg_general(xy, 1, 1000))
    assert report["fdeg"] == 2 and report["witness"] == [[1, 1], [1, 1]]
    assert report["counterexample"] is None

    ok = json.loads(d.verify_identity("thm_3_1_b", 50, 7))
    assert ok["verdict"] == "pass"
    bad = json.loads(d.verify_identity("thm_7_3_uncorrected"))
    assert bad["verdict"] == "fail"
    assert any(fl["inputs"] == {"m": [3], "n": [2], "x": [2]} for fl in bad["failures"])

    try:
        d.verify_identity("no_such_identity")
    except KeyError:
        pass
    else:
        raise AssertionError("unknown identity accepted")

    try:
        d.Polyfract.parse("x1 + )", 1)
    except ValueError as e:
        assert "column 6" in str(e)
    else:
        raise AssertionError("bad expression accepted")

    print("pydiffalg smoke test passed ({} identities)".format(len(d.list_identities())))


if __name__ == "__main__":
    main()

"""Smoke test for the rothe_lab extension module.

Build and install first, e.g.

    pip install maturin
    maturin build --release -m crates/py/Cargo.toml -o target/wheels
    pip install target/wheels/rothe_lab-*.whl

then run `python python/smoke_test.py`.
"""

import json
from fractions import Fraction
from math import comb

import rothe_lab as rl


def check_words():
    ws = rl.enumerate_gamma(3, 1, m=1)
    assert [str(w) for w in ws] == ["ab", "ba"]
    assert [str(w) for w in rl.enumerate_gamma(3, 1, m=1, prefix_weight=2)] == ["ba"]
    assert str(rl.enumerate_gamma(0, 0, m=0)[0]) == "ε"

    w = rl.Word("abab")
    assert w.weight(m=2) == 8 and w.b_count() == 2 and len(w) == 4
    assert w.inversions() == 1
    assert w.prefix_weights(m=1) == [1, 3, 4, 6]
    assert w.reverse() == rl.Word("baba")
    assert rl.Word("ab") + "a" == rl.Word("aba")
    assert len({rl.Word("ab"), rl.Word("ab"), rl.Word("ba")}) == 2

    for p, k, m in [(7, 2, 1), (9, 3, 2), (6, 0, 0)]:
        assert len(rl.enumerate_gamma(p, k, m=m)) == comb(p - k * m, k)


def check_bijections():
    assert str(rl.theorem1_forward("ab", 1, 1, m=1)) == "ba"
    assert str(rl.theorem1_inverse("ba", 1, 1, m=1)) == "ab"
    assert rl.equal_weight_prefixes("ab", "ba", m=1) == (2, 2, 3)
    assert rl.equal_weight_prefixes("aab", "ba", m=1) == (2, 1, 2)

    p, q, n, m = 4, 3, 2, 2
    domain = rl.theorem1_domain(p, q, n, m=m)
    image = sorted(rl.theorem1_forward(w, p, q, m=m) for w in domain)
    assert image == sorted(rl.theorem1_codomain(p, q, n, m=m))
    for w in domain:
        assert rl.theorem1_inverse(rl.theorem1_forward(w, p, q, m=m), p, q, m=m) == w

    d = rl.decompose("ba", 1, 1, m=1)
    assert d.branch == "B" and (d.j, d.k) == (1, 1)
    assert str(d.u_prime) == "ε" and str(d.v) == "a"
    assert str(d) == "BranchB j=1 k=1 u'=ε v=a"
    assert rl.compose(d, 1, 1, m=1) == rl.Word("ba")
    assert rl.decompose("bba", 2, 1, m=1).branch == "A"
    assert str(rl.compose(rl.Decomposition.branch_b(2, 1, "", "aa"), 1, 2, m=2)) == "baa"

    try:
        rl.theorem1_forward("ba", 1, 1, m=1)
    except rl.RotheLabError:
        pass
    else:
        raise AssertionError("expected a domain error")


def check_identities():
    r = rl.check_rothe2(2, 2, 1, 2)
    assert r.passed and r.lhs == "6" == r.rhs
    assert str(r) == "PASS rothe2 [x=2 y=2 z=1 n=2] lhs=6 rhs=6"
    assert json.loads(r.to_json()) == {
        "identity": "rothe2",
        "params": {"x": "2", "y": "2", "z": "1", "n": 2},
        "lhs": "6",
        "rhs": "6",
        "status": "pass",
    }
    assert rl.check_rothe1(Fraction(1, 2), "-3", 5, 4)
    assert rl.check_gould("1/3", 2, -1, Fraction(2, 7), 3)
    assert rl.check_pqkm(3, 0, 1, 2)
    assert rl.check_kmx(4, 2, 2, 2)
    assert rl.check_kmpink(5, 2, 2, 2, 1)
    assert rl.check_cardinality(10, 3, 2)

    cert = rl.grid_prove("rothe1", 3)
    assert cert.passed and cert.params["points"] == 64
    assert rl.grid_prove("gould", 2, x0="1/2", z0=-3).passed


def check_q_engine():
    g = rl.gaussian_binomial(4, 2)
    assert g.coeffs() == {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}
    assert g.eval_at_one() == 6 and g.is_palindromic()
    assert str(rl.gaussian_binomial(3, 1)) == "1+q+q^2"
    assert rl.gaussian_binomial(3, 5).coeffs() == {}
    assert rl.LaurentPolynomial({0: 1, 1: 1}) * rl.LaurentPolynomial({0: 1, 1: -1}) == rl.LaurentPolynomial(
        {0: 1, 2: -1}
    )

    assert rl.inv_generating_function(7, 2, m=1) == rl.gaussian_binomial(5, 2)
    assert rl.check_invw(9, 3, 1)
    r = rl.check_qchu(2, 1, 1, 1)
    assert r.passed and str(r.lhs) == "1+q+q^2"
    assert sum(rl.qchu_terms(3, 2, 1, 2), rl.LaurentPolynomial()) == rl.gaussian_binomial(3 + 2, 2)
    assert rl.check_qchu_m1(4, 2, 3)
    assert rl.qweighted_bijection_check(2, 2, 1, 2)


def check_sweep():
    reports, skipped = rl.sweep("cardinality", {"p": (0, 10), "k": "0..4", "m": (0, 2)})
    assert len(reports) == 165 and skipped == 0 and all(reports)
    reports, skipped = rl.sweep("kmx", {"p": (0, 6), "q": (0, 2), "m": 1, "n": (0, 2)})
    assert all(reports) and skipped > 0
    assert len(rl.IDENTITIES) == 11
    try:
        rl.sweep("cardinality", {"p": (0, 10), "k": (0, 4), "m": (0, 2)}, cap=10)
    except rl.RotheLabError:
        pass
    else:
        raise AssertionError("expected the work cap to trip")


if __name__ == "__main__":
    check_words()
    check_bijections()
    check_identities()
    check_q_engine()
    check_sweep()
    print("rothe_lab smoke test OK")

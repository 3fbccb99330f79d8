import os
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import padic_henon as ph


def v_p(q, p):
    q = Fraction(q)
    if q == 0:
        return None
    v, n, d = 0, q.numerator, q.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def norm_exp(q, p):
    v = v_p(q, p)
    return None if v is None else -v


def plain_backward(x, y, c, steps):
    pts = [(Fraction(x), Fraction(y))]
    for _ in range(steps):
        x, y = pts[-1]
        if y == 0:
            break
        pts.append((y, (x - c) / y))
    return pts


def test_worked_orbit_matches_fractions():
    rec = ph.backward_orbit(255, 10, 5, p=5, steps=12, escape_exponent=10**6)
    want = plain_backward(255, 10, Fraction(5), 12)
    assert [(s["x"], s["y"]) for s in rec["steps"]] == want
    assert (rec["steps"][2]["x"], rec["steps"][2]["y"]) == (25, Fraction(1, 5))
    for s, (x, y) in zip(rec["steps"], want):
        assert (s["a"], s["b"]) == (norm_exp(x, 5), norm_exp(y, 5))


def test_period_three_and_undefined():
    rec = ph.backward_orbit(-1, -1, 1, steps=30)
    pts = [(s["x"], s["y"]) for s in rec["steps"]]
    assert all(pts[i] == pts[i - 3] for i in range(3, len(pts)))
    rec = ph.backward_orbit(1, 1, Fraction(1, 3), steps=50, escape_exponent=10)
    assert rec["verdict"] == {"type": "UndefinedInverse", "step": 6}


def test_bad_input_raises():
    with pytest.raises(Exception):
        ph.backward_orbit("1/0", 1, 1)
    with pytest.raises(Exception):
        ph.backward_orbit(1, 1, 1, p=4)


def fib_table(n):
    f = {-2: 1, -1: 0}
    for i in range(0, n + 1):
        f[i] = f[i - 1] + f[i - 2]
    return f


def test_fibonacci_and_tn():
    f = fib_table(90)
    assert all(ph.fib(n) == f[n] for n in range(-2, 91))
    assert ph.fib(12) == 233
    rep = ph.tn_report(8, 2, 3)
    assert rep["ratio_exact_over_ball_product"] == "4/9"
    for row in rep["rows"]:
        n = row["n"]
        assert Fraction(row["exact"]) == Fraction(3) ** f[n + 2] * Fraction(4, 9)
        assert Fraction(row["ball_product"]) == Fraction(3) ** f[n + 2]


def golden_below(a, b):
    # b*beta < a  <=>  u > sqrt5*b with u = 2a - b, decided in integers.
    u = 2 * a - b
    if b < 0:
        return u >= 0 or u * u < 5 * b * b
    return u > 0 and u * u > 5 * b * b


def test_golden_oracle_self_check():
    beta = (1 + 5 ** 0.5) / 2
    for a in range(-40, 41):
        for b in range(-40, 41):
            if (a, b) != (0, 0):
                assert golden_below(a, b) == (b * beta < a)


def test_classify_named_profiles():
    assert ph.classify(0, 0, -1)["label"]["name"] == "Z"
    assert ph.classify(-1, -1, -1)["label"]["name"] == "R"
    lab = ph.classify(1, 1, 2)["label"]
    assert (lab["name"], lab["index"]) == ("J", 0)
    assert ph.classify(None, 3, 0)["label"]["name"] == "G"
    assert ph.classify(0, 3, 1)["label"]["name"] == "G"


@settings(max_examples=200, deadline=None)
@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(1, 4))
def test_large_fgh_by_inequalities(a, b, d):
    # F, G, H carve out their parts of the large-c plane by plain inequalities.
    name = ph.classify(a, b, d)["label"]["name"]
    if a < d and b < 0:
        assert name == "F"
    if a <= d and b > d:
        assert name == "G"
    if a > d and b <= 0:
        assert name == "H"


@settings(max_examples=100, deadline=None)
@given(
    st.integers(-10**6, 10**6).filter(lambda n: n != 0),
    st.integers(1, 10**4),
    st.integers(-10**6, 10**6).filter(lambda n: n != 0),
    st.integers(1, 10**4),
    st.sampled_from([Fraction(1), Fraction(1, 3), Fraction(9), Fraction(-2, 7)]),
)
def test_forward_undoes_backward(xn, xd, yn, yd, c):
    rec = ph.backward_orbit(Fraction(xn, xd), Fraction(yn, yd), c, steps=6, escape_exponent=10**6)
    pts = [(s["x"], s["y"]) for s in rec["steps"]]
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        assert (x1 * y1 + c, x1) == (x0, y0)


def test_fixed_points():
    p = 5
    fps = ph.fixed_points(p - p * p, p)
    exact = sorted(Fraction(int(fp["exact"]["num"]), int(fp["exact"]["den"])) for fp in fps)
    assert exact == sorted([Fraction(p), Fraction(1 - p)])
    assert ph.fixed_points(Fraction(-1, 2), 5) == []


def test_transition_and_campaign():
    rep = ph.verify_transition({"id": "large-J0-invariant", "d": 2, "samples": 100})
    assert rep["failures"] == 0 and rep["passes"] == 100
    res = ph.run_campaign(
        {"entries": [{"id": "large-J0-invariant", "d": 2, "samples": 50, "targets": ["F"], "expect": "counterexample"}]}
    )
    assert res["ok"]


def test_cli_exit_codes():
    code, out, _ = ph.run_cli(["grid", "--d", "1", "--window", "3", "--format", "csv"])
    assert code == 0 and out.splitlines()[0] == "a,b,name,index"
    assert ph.run_cli(["orbit", "--prime", "4", "--x", "1", "--y", "1"])[0] == 2

"""Backward dynamics of the p-adic Henon map f(x, y) = (xy + c, x) over Q_p^2.

Rationals cross the boundary as "num/den" strings and come back as
fractions.Fraction where they are exact.
"""

import json
from fractions import Fraction

from . import _core

ArithmeticError = _core.ArithmeticError
BudgetExceeded = _core.BudgetExceeded


def _q(v):
    return str(Fraction(v)) if not isinstance(v, str) else v


def _frac(j):
    return Fraction(int(j["num"]), int(j["den"])) if isinstance(j, dict) else Fraction(j)


def backward_orbit(x, y, c, p=3, steps=50, escape_exponent=None, bit_budget=None):
    """Orbit record of f^{-1} from (x, y); step points carry Fraction coordinates."""
    return _orbit(x, y, c, p, steps, escape_exponent, bit_budget, False)


def forward_orbit(x, y, c, p=3, steps=50, escape_exponent=None, bit_budget=None):
    return _orbit(x, y, c, p, steps, escape_exponent, bit_budget, True)


def _orbit(x, y, c, p, steps, escape_exponent, bit_budget, forward):
    budget = _core.default_bit_budget if bit_budget is None else bit_budget
    rec = json.loads(_core.orbit_json(_q(x), _q(y), _q(c), p, steps, escape_exponent, budget, forward))
    for st in rec["steps"]:
        st["x"] = _frac(st["x"])
        st["y"] = _frac(st["y"])
    return rec


def classify(a, b, d):
    """Region of the norm profile (a, b); a = None stands for x = 0."""
    return json.loads(_core.classify_json(a, b, d))


def fixed_points(c, p=3, precision=20):
    return json.loads(_core.fixed_points_json(_q(c), p, precision))


def tn_report(n_max, k=2, p=3):
    return json.loads(_core.tn_report_json(n_max, k, p))


def verify_transition(spec):
    return json.loads(_core.verify_transition_json(json.dumps(spec)))


def run_campaign(campaign):
    return json.loads(_core.run_campaign_json(json.dumps(campaign)))


def fib(n):
    """F_n with F_{-2} = 1, F_{-1} = 0, F_0 = F_1 = 1."""
    return int(_core.fib(n))


def run_cli(args):
    """(exit code, stdout, stderr) of the padic-henon command line."""
    return _core.run_cli([str(a) for a in args])


__all__ = [
    "ArithmeticError",
    "BudgetExceeded",
    "backward_orbit",
    "forward_orbit",
    "classify",
    "fixed_points",
    "tn_report",
    "verify_transition",
    "run_campaign",
    "fib",
    "run_cli",
]

"""Closed-form counts and bounds, evaluated exactly where possible.

Asymptotic statements lose their ``(1 +- o(1))`` factors here; the matching
:class:`BoundReport` carries ``asymptotic=True`` so callers never mistake the
value for a certified constant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

#: Rational strictly below e (e = 2.718281828459045235...).
E_LOWER = Fraction(2718281828459045, 10**15)
LOG2_THRESHOLD = 1 << 1024


@dataclass
class BoundReport:
    name: str
    inputs: dict
    value: int | float | None
    side: str
    log2_value: float | None = None
    asymptotic: bool = False
    compared_against: int | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "inputs": self.inputs, "side": self.side}
        if self.log2_value is not None:
            out["log2_value"] = self.log2_value
        elif isinstance(self.value, int):
            out["value"] = str(self.value)
        else:
            out["value"] = self.value
        if self.asymptotic:
            out["asymptotic"] = True
        if self.compared_against is not None:
            out["compared_against"] = str(self.compared_against)
        return out

    def holds_for(self, observed: int) -> bool:
        """Is ``observed`` on the right side of an exact (non-asymptotic) bound?"""
        if self.asymptotic:
            raise ValueError(f"{self.name} is asymptotic; compare both sides, do not assert")
        if self.log2_value is not None:
            ok = math.log2(observed) <= self.log2_value if self.side == "upper" else math.log2(observed) >= self.log2_value
            return ok if observed > 0 else self.side == "upper"
        return observed <= self.value if self.side == "upper" else observed >= self.value


def _exact_report(name: str, inputs: dict, value: int, side: str) -> BoundReport:
    if value >= LOG2_THRESHOLD:
        return BoundReport(name, inputs, None, side, log2_value=_log2_int(value))
    return BoundReport(name, inputs, value, side)


def _log2_int(x: int) -> float:
    shift = max(x.bit_length() - 64, 0)
    return math.log2(x >> shift) + shift


# -- minimum degree -------------------------------------------------------------
def min_degree_lower_bound(ell: int, t: int) -> tuple[int, float]:
    """Smallest ``D`` with ``C(D, ell-2) >= t`` and the weaker closed form ``(ell-2) t^(1/(ell-2)) / e``."""
    if ell < 3 or t < 1:
        raise ValueError("need ell >= 3 and t >= 1")
    q = ell - 2
    d = q
    while math.comb(d, q) < t:
        d += 1
    return d, q * t ** (1 / q) / math.e


def exceeds_closed_form(ell: int, t: int) -> bool:
    """Exact check that the integer bound is strictly above the closed form.

    ``D > q t^(1/q) / e``  iff  ``(e D / q)^q > t``; using a rational lower
    bound for ``e`` keeps the test sound.
    """
    d, _ = min_degree_lower_bound(ell, t)
    q = ell - 2
    return (E_LOWER * d / q) ** q > t


# -- subdivision order from average degree --------------------------------------
def ko_threshold(d: int) -> Fraction:
    """Average degree ``(10/23) d^2`` that forces a subdivided ``K_d`` (lower-order term dropped)."""
    if d < 1:
        raise ValueError("d must be at least 1")
    return Fraction(10 * d * d, 23)


def subdivision_order(avg_degree: float) -> int:
    """Largest ``d`` with ``(10/23) d^2 <= avg_degree`` (0 when none)."""
    if avg_degree < 0:
        raise ValueError("average degree must be non-negative")
    avg = Fraction(avg_degree)
    d = math.isqrt(int(avg * 23 / 10)) + 1
    while d > 0 and Fraction(10 * d * d, 23) > avg:
        d -= 1
    return d


def bound_i_log2(ell: int, t: int) -> float:
    """``log2`` of the complete-pattern lower bound ``2^(t^(1/(2(ell-2))))``."""
    if ell < 4 or t < 1:
        raise ValueError("need ell >= 4 and t >= 1")
    return t ** (1 / (2 * (ell - 2)))


def eq2_d(ell: int, t: int) -> float:
    """Guaranteed clique-subdivision order ``sqrt(23 (ell-2) / (10 e)) t^(1/(2(ell-2)))``."""
    if ell < 4 or t < 1:
        raise ValueError("need ell >= 4 and t >= 1")
    return math.sqrt(23 * (ell - 2) / (10 * math.e)) * t ** (1 / (2 * (ell - 2)))


# -- polynomial upper bounds ------------------------------------------------------
def bound_ii(ell: int, e_f: int, t: int) -> int:
    """``2^ell (t+2)^(e(F)+2 ell)``."""
    if min(ell, e_f, t) < 0:
        raise ValueError("parameters must be non-negative")
    return 2**ell * (t + 2) ** (e_f + 2 * ell)


def lemma5_bound(ell: int, e_f: int, b: int) -> int:
    """``2^ell (|B|+1)^(e(F)+2 ell)``."""
    if min(ell, e_f, b) < 0:
        raise ValueError("parameters must be non-negative")
    return 2**ell * (b + 1) ** (e_f + 2 * ell)


def lemma5_subset_count(a: int, b: int, ell: int, e_f: int) -> int:
    """Subsets with at most ``2 ell + e(F)`` vertices in ``B``: ``2^|A| sum_i C(|B|, i)``."""
    return 2**a * sum(math.comb(b, i) for i in range(min(b, 2 * ell + e_f) + 1))


# -- the K_ell^- exponent ---------------------------------------------------------
def bound_iii_exponent(ell: int, eps: float) -> float:
    if ell < 4 or not 0 < eps < 0.5:
        raise ValueError("need ell >= 4 and 0 < eps < 1/2")
    return (1 - 2 * eps) * (math.comb(ell - 2, 2) + 1)


def kminus_exponent_identity(ell: int) -> tuple[int, int]:
    """``(e(K_ell^-) - 2 ell + 5, C(ell-2, 2) + 1)``; the two entries agree."""
    if ell < 4:
        raise ValueError("need ell >= 4")
    return (math.comb(ell, 2) - 1 - 2 * ell + 5, math.comb(ell - 2, 2) + 1)


def book_family_lower(b: int, ell: int) -> int:
    """``C(|B|, C(ell-2, 2) + 1)``: distinct subdivided ``K_ell^-`` obtainable in a book."""
    return math.comb(b, math.comb(ell - 2, 2) + 1)


# -- exact counts in complete hosts -----------------------------------------------
def complete_count(ell: int, r: int) -> int:
    """``sum_{i=ell}^{r} C(r, i)``: vertex sets of ``K_r`` spanning a subdivided ``K_ell``."""
    if not 3 <= ell <= r:
        raise ValueError("need 3 <= ell <= r")
    return sum(math.comb(r, i) for i in range(ell, r + 1))


def komlos_cycle_count(d: int) -> int:
    """Distinguishable cycles in ``K_{d+1}``: ``2^(d+1) - C(d+1, 2) - d - 2``."""
    if d < 2:
        raise ValueError("need d >= 2")
    return 2 ** (d + 1) - math.comb(d + 1, 2) - d - 2


def theorem_i_count_lower(d: int, ell: int) -> int:
    """``2^d - sum_{i<ell} C(d, i)``: index sets of size at least ``ell``."""
    if ell > d:
        raise ValueError("need ell <= d")
    return 2**d - sum(math.comb(d, i) for i in range(ell))


# -- reports ------------------------------------------------------------------------
def bound_report(name: str, **inputs) -> BoundReport:
    """Named evaluator wrapped as a :class:`BoundReport`."""
    if name == "thm2ii":
        return _exact_report(name, inputs, bound_ii(inputs["ell"], inputs["e_F"], inputs["t"]), "upper")
    if name == "lemma5":
        return _exact_report(name, inputs, lemma5_bound(inputs["ell"], inputs["e_F"], inputs["b"]), "upper")
    if name == "lemma5-subsets":
        v = lemma5_subset_count(inputs["a"], inputs["b"], inputs["ell"], inputs["e_F"])
        return _exact_report(name, inputs, v, "upper")
    if name == "complete-count":
        return _exact_report(name, inputs, complete_count(inputs["ell"], inputs["r"]), "lower")
    if name == "komlos":
        return _exact_report(name, inputs, komlos_cycle_count(inputs["d"]), "lower")
    if name == "thm2i-family":
        return _exact_report(name, inputs, theorem_i_count_lower(inputs["d"], inputs["ell"]), "lower")
    if name == "book-family":
        return _exact_report(name, inputs, book_family_lower(inputs["b"], inputs["ell"]), "lower")
    if name == "thm2i":
        return BoundReport(name, inputs, None, "lower", log2_value=bound_i_log2(inputs["ell"], inputs["t"]), asymptotic=True)
    if name == "eq2-d":
        return BoundReport(name, inputs, eq2_d(inputs["ell"], inputs["t"]), "lower", asymptotic=True)
    if name == "thm2iii":
        exp = bound_iii_exponent(inputs["ell"], inputs["eps"])
        return BoundReport(name, inputs, inputs["t"] ** exp, "lower", asymptotic=True)
    if name == "ko-threshold":
        return BoundReport(name, inputs, float(ko_threshold(inputs["d"])), "upper", asymptotic=True)
    if name == "min-degree":
        exact, closed = min_degree_lower_bound(inputs["ell"], inputs["t"])
        return BoundReport(name, {**inputs, "closed_form": closed}, exact, "lower")
    raise KeyError(f"unknown bound {name!r}")

"""One-shot exact consistency checks wiring the recursion, trees and oracle.

Every check compares reduced fractions for exact equality over an explicit
parameter range; there are no tolerances. A failing check reports the
lexicographically first counterexample with both sides rendered as text, so
failures are reproducible. Checks are independent and share no state beyond
per-call memo caches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cutjoin import canonical_key, cycle_value
from .exact_arith import format_rational
from .hodge import hodge_integral
from .oracle import bernoulli_rhs, gf_expand, oracle_integral
from .trees import tree_sum

__all__ = [
    "CheckReport",
    "check_tree_identity",
    "check_bernoulli_identity",
    "check_genus0",
    "check_oracle_agreement",
    "check_choice_independence",
    "DEFAULT_AUX_VECTORS",
]

DEFAULT_AUX_VECTORS: tuple[tuple[int, ...], ...] = ((1,), (2,), (3,), (1, 1), (2, 3))


@dataclass(frozen=True)
class CheckReport:
    check: str
    range_text: str
    passed: bool
    instances: int
    counterexample: dict[str, str] | None = None

    def render_text(self) -> str:
        if self.passed:
            return (
                f"PASS {self.check} range {self.range_text}"
                f" instances={self.instances}"
            )
        ce = self.counterexample or {}
        return (
            f"FAIL {self.check} range {self.range_text}"
            f" counterexample {ce.get('params', '?')}:"
            f" lhs={ce.get('lhs', '?')} rhs={ce.get('rhs', '?')}"
        )

    def to_json_obj(self) -> dict:
        obj: dict = {
            "check": self.check,
            "range": self.range_text,
            "status": "pass" if self.passed else "fail",
        }
        if self.counterexample is not None:
            obj["counterexample"] = dict(self.counterexample)
        return obj


def _passed(check: str, range_text: str, instances: int) -> CheckReport:
    return CheckReport(check, range_text, True, instances)


def _failed(
    check: str,
    range_text: str,
    instances: int,
    params: str,
    lhs: Fraction,
    rhs: Fraction,
) -> CheckReport:
    return CheckReport(
        check,
        range_text,
        False,
        instances,
        {"params": params, "lhs": format_rational(lhs), "rhs": format_rational(rhs)},
    )


def check_tree_identity(max_genus: int = 3, max_leaves: int = 5) -> CheckReport:
    """Tree sums equal recursion values at all-unit weights.

    The pair (genus 0, one leaf) is skipped: the tree side is the single
    leaf with sum 1, but the recursion side would need a negative psi
    exponent and is undefined.
    """
    name = "tree-identity"
    range_text = f"g<={max_genus},n<={max_leaves}"
    cache: dict = {}
    instances = 0
    for g in range(max_genus + 1):
        for n in range(1, max_leaves + 1):
            if g == 0 and n == 1:
                continue
            lhs = tree_sum(g, n)
            rhs = cycle_value(canonical_key(g, g, (1,) * n), cache)
            instances += 1
            if lhs != rhs:
                return _failed(name, range_text, instances, f"g={g},n={n}", lhs, rhs)
    return _passed(name, range_text, instances)


def check_bernoulli_identity(max_genus: int = 3, max_extra: int = 3) -> CheckReport:
    """Alternating binomial combinations of tree sums hit the Bernoulli form."""
    name = "bernoulli"
    range_text = f"g<={max_genus},n<={max_extra}"
    instances = 0
    for g in range(1, max_genus + 1):
        rhs = bernoulli_rhs(g)
        for n in range(1, max_extra + 1):
            lhs = Fraction(0)
            for j in range(g + 1):
                lhs += (-1) ** j * math.comb(g, j) * tree_sum(g, n + g - j)
            instances += 1
            if lhs != rhs:
                return _failed(name, range_text, instances, f"g={g},n={n}", lhs, rhs)
    return _passed(name, range_text, instances)


def check_genus0(max_leaves: int = 9) -> CheckReport:
    """Genus-zero tree sums all equal 1."""
    name = "genus0"
    range_text = f"n<={max_leaves}"
    one = Fraction(1)
    for n in range(1, max_leaves + 1):
        lhs = tree_sum(0, n)
        if lhs != one:
            return _failed(name, range_text, n, f"n={n}", lhs, one)
    return _passed(name, range_text, max_leaves)


def check_oracle_agreement(max_genus: int = 6) -> CheckReport:
    """Recursion-pipeline integrals equal kernel-expansion coefficients."""
    name = "oracle"
    range_text = f"g<={max_genus}"
    expansion = gf_expand(max_genus)
    cache: dict = {}
    instances = 0
    for g in range(1, max_genus + 1):
        for i in range(g + 1):
            lhs = hodge_integral(g, i, cache=cache)
            rhs = oracle_integral(g, i, expansion)
            instances += 1
            if lhs != rhs:
                return _failed(name, range_text, instances, f"g={g},i={i}", lhs, rhs)
    return _passed(name, range_text, instances)


def check_choice_independence(
    max_genus: int = 3,
    aux_vectors: tuple[tuple[int, ...], ...] = DEFAULT_AUX_VECTORS,
) -> CheckReport:
    """The integral is the same rational for every auxiliary weight vector."""
    if not aux_vectors:
        raise ValueError("at least one auxiliary weight vector is required")
    name = "independence"
    aux_text = ";".join(",".join(str(w) for w in aux) for aux in aux_vectors)
    range_text = f"g<={max_genus},aux={aux_text}"
    cache: dict = {}
    instances = 0
    for g in range(1, max_genus + 1):
        for i in range(g + 1):
            reference = hodge_integral(g, i, aux_vectors[0], cache=cache)
            for aux in aux_vectors[1:]:
                value = hodge_integral(g, i, aux, cache=cache)
                instances += 1
                if value != reference:
                    params = f"g={g},i={i},aux=[{','.join(map(str, aux))}]"
                    return _failed(name, range_text, instances, params, value, reference)
    return _passed(name, range_text, instances)

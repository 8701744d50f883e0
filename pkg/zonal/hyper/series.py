"""Hypergeometric functions of matrix argument, summed shell by shell in weight."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from ..algebra.jack import jack_C_eval, jack_C_exact
from ..algebra.partitions import (
    Partition,
    Scalar,
    exact,
    gen_pochhammer,
    jack_param,
    partitions_of,
)
from ..errors import HyperError

logger = logging.getLogger(__name__)

DEFAULT_MAX_WEIGHT = 20


@dataclass(frozen=True)
class HyperSpec:
    a_params: tuple[Fraction, ...]
    b_params: tuple[Fraction, ...]
    alpha: Fraction
    nvars: int
    max_weight: int = DEFAULT_MAX_WEIGHT

    def __post_init__(self):
        object.__setattr__(self, "a_params", tuple(exact(a) for a in self.a_params))
        object.__setattr__(self, "b_params", tuple(exact(b) for b in self.b_params))
        object.__setattr__(self, "alpha", jack_param(self.alpha))
        if self.nvars < 1:
            raise HyperError(f"nvars must be positive, got {self.nvars}")
        if self.max_weight < 0:
            raise HyperError(f"max_weight must be nonnegative, got {self.max_weight}")

    @property
    def label(self) -> str:
        return f"{len(self.a_params)}F{len(self.b_params)}^({self.alpha})"

    def termination_order(self) -> int | None:
        """Smallest r with some a_i = -r, so that only κ with κ_1 ≤ r contribute."""
        orders = [int(-a) for a in self.a_params if a <= 0 and a.denominator == 1]
        return min(orders) if orders else None

    def shells(self):
        """(weight, partitions) pairs in summation order."""
        r = self.termination_order()
        if r is not None:
            for weight in range(r * self.nvars + 1):
                yield weight, partitions_of(weight, self.nvars, r)
        else:
            for weight in range(self.max_weight + 1):
                yield weight, partitions_of(weight, self.nvars)


@dataclass
class HyperResult:
    value: complex | float | Fraction
    tail_estimate: float
    terminated: bool
    terms: int = 0
    shell_sums: list = field(default_factory=list)


@lru_cache(maxsize=None)
def series_coefficient(
    a_params: tuple[Fraction, ...],
    b_params: tuple[Fraction, ...],
    alpha: Fraction,
    kappa: Partition,
) -> Fraction:
    """Π[a_i]_κ / (Π[b_j]_κ |κ|!), zero when a numerator factor vanishes."""
    num = Fraction(1)
    for a in a_params:
        num *= gen_pochhammer(a, kappa, alpha)
        if num == 0:
            return Fraction(0)
    den = Fraction(math.factorial(kappa.weight))
    for b in b_params:
        den *= gen_pochhammer(b, kappa, alpha)
    if den == 0:
        raise HyperError(f"b-parameter pole at kappa={kappa}")
    return num / den


def _is_exact_point(x) -> bool:
    return all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in x)


def pFq(spec: HyperSpec, x: Sequence) -> HyperResult:
    """Σ_κ Π[a_i]_κ/Π[b_j]_κ · C_κ^(α)(x)/|κ|!.

    Terminating series (some a_i a nonpositive integer) are summed over the
    whole box and returned exactly for exact input; otherwise the sum stops
    at ``max_weight`` and the last shell's magnitude is the tail estimate.
    """
    if len(x) != spec.nvars:
        raise HyperError(f"length mismatch: expected {spec.nvars} values, got {len(x)}")
    exact_mode = _is_exact_point(x)
    if not exact_mode:
        x = np.asarray(x)
    r = spec.termination_order()
    total = Fraction(0) if exact_mode else 0.0
    shell_sums = []
    terms = 0
    for weight, shell in spec.shells():
        shell_total = Fraction(0) if exact_mode else 0.0
        for kappa in shell:
            coef = series_coefficient(spec.a_params, spec.b_params, spec.alpha, kappa)
            if coef == 0:
                continue
            if exact_mode:
                shell_total += coef * (jack_C_exact(kappa, spec.alpha, x) if weight else 1)
            else:
                shell_total += float(coef) * (jack_C_eval(kappa, spec.alpha, x) if weight else 1.0)
            terms += 1
        shell_sums.append(shell_total)
        total += shell_total
    tail = 0.0 if r is not None else float(abs(shell_sums[-1]))
    logger.debug(f"  {spec.label}: {terms} terms, tail={tail:.2e}")
    return HyperResult(value=total, tail_estimate=tail, terminated=r is not None, terms=terms, shell_sums=shell_sums)


def hyp(
    a_params: Sequence[Scalar],
    b_params: Sequence[Scalar],
    alpha: Scalar,
    x: Sequence,
    max_weight: int = DEFAULT_MAX_WEIGHT,
):
    """Value of pFq at x; the tail estimate is discarded."""
    spec = HyperSpec(tuple(a_params), tuple(b_params), alpha, len(x), max_weight)
    return pFq(spec, x).value

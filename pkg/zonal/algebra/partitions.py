"""Partitions, their diagram statistics and exact generalized Pochhammer symbols.

Partitions are immutable and canonical: trailing zeros are stripped on
construction, so two partitions compare equal exactly when their parts do.
All scalar quantities are ``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from sympy.utilities.iterables import partitions as _sympy_partitions

from ..errors import PartitionError

Scalar = Fraction | int


def exact(value: Scalar | str) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(value, float):
        raise TypeError("exact scalars must not be built from floats")
    return Fraction(value)


def jack_param(value: Scalar | str) -> Fraction:
    alpha = exact(value)
    if alpha <= 0:
        raise PartitionError(f"Jack parameter must be positive, got {alpha}")
    return alpha


def scalar_to_str(value: Fraction) -> str:
    return str(Fraction(value))


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise PartitionError(f"parts must be positive: {self.parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PartitionError(f"parts must be weakly decreasing: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,1"`` (empty string is the empty partition)."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError as e:
            raise PartitionError(f"bad partition syntax: {text!r}") from e

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part access; parts beyond the length are zero."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self.parts) > n:
            raise PartitionError(f"{self} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.parts, 1):
            for j in range(1, row + 1):
                yield i, j

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


EMPTY = Partition(())


def box(s: int, n: int) -> Partition:
    """The rectangular partition s^N."""
    return Partition((s,) * n) if s > 0 else EMPTY


def hook(k: int, l: int) -> Partition:
    """The hook (k-l, 1^l) of weight k."""
    return Partition((k - l,) + (1,) * l)


def is_hook(kappa: Partition) -> bool:
    return all(p == 1 for p in kappa.parts[1:])


@lru_cache(maxsize=None)
def partitions_of(n: int, max_length: int | None = None, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n with bounded length and largest part, lex-decreasing."""
    if n == 0:
        return (EMPTY,)
    if (max_length is not None and max_length <= 0) or (max_part is not None and max_part <= 0):
        return ()
    found = []
    for mult in _sympy_partitions(n, m=max_length, k=max_part):
        parts = sorted((p for p, c in mult.items() for _ in range(c)), reverse=True)
        found.append(Partition(tuple(parts)))
    return tuple(sorted(found, reverse=True))


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """Partitions fitting in a box with ``rows`` parts each at most ``cols``."""
    for weight in range(rows * cols + 1):
        yield from partitions_of(weight, rows, cols)


def conjugate(kappa: Partition) -> Partition:
    if not kappa.parts:
        return EMPTY
    return Partition(tuple(sum(1 for p in kappa.parts if p >= j) for j in range(1, kappa.parts[0] + 1)))


def double(kappa: Partition) -> Partition:
    return Partition(tuple(2 * p for p in kappa.parts))


def square(kappa: Partition) -> Partition:
    return Partition(tuple(p for p in kappa.parts for _ in range(2)))


def halve(mu: Partition) -> Partition | None:
    """Inverse of ``double``; None unless every part is even."""
    if any(p % 2 for p in mu.parts):
        return None
    return Partition(tuple(p // 2 for p in mu.parts))


def unsquare(mu: Partition) -> Partition | None:
    """Inverse of ``square``; None unless parts come in equal adjacent pairs."""
    parts = mu.parts
    if len(parts) % 2 or any(parts[i] != parts[i + 1] for i in range(0, len(parts), 2)):
        return None
    return Partition(parts[::2])


def dominance_le(mu: Partition, kappa: Partition) -> bool:
    if mu.weight != kappa.weight:
        raise PartitionError("incomparable weights")
    total_mu = total_kappa = 0
    for l in range(1, max(mu.length, kappa.length) + 1):
        total_mu += mu[l]
        total_kappa += kappa[l]
        if total_mu > total_kappa:
            return False
    return True


def _check_cell(kappa: Partition, i: int, j: int) -> None:
    if not (1 <= i <= kappa.length and 1 <= j <= kappa[i]):
        raise PartitionError(f"cell ({i},{j}) outside diagram of {kappa}")


def arm(kappa: Partition, i: int, j: int) -> int:
    _check_cell(kappa, i, j)
    return kappa[i] - j


def leg(kappa: Partition, i: int, j: int) -> int:
    _check_cell(kappa, i, j)
    return conjugate(kappa)[j] - i


def hook_upper(kappa: Partition, alpha: Scalar) -> Fraction:
    """d'_κ = Π_s (α(a(s)+1) + l(s))."""
    alpha = exact(alpha)
    kc = conjugate(kappa)
    result = Fraction(1)
    for i, j in kappa.cells():
        result *= alpha * (kappa[i] - j + 1) + (kc[j] - i)
    return result


def hook_lower(kappa: Partition, alpha: Scalar) -> Fraction:
    """h_κ = Π_s (α a(s) + l(s) + 1)."""
    alpha = exact(alpha)
    kc = conjugate(kappa)
    result = Fraction(1)
    for i, j in kappa.cells():
        result *= alpha * (kappa[i] - j) + (kc[j] - i) + 1
    return result


def rising(u: Scalar, n: int) -> Fraction:
    """Classical Pochhammer (u)_n."""
    u = exact(u)
    result = Fraction(1)
    for i in range(n):
        result *= u + i
    return result


def gen_pochhammer(u: Scalar, kappa: Partition, alpha: Scalar) -> Fraction:
    """[u]^(α)_κ as the finite product of shifted rising factorials."""
    u, alpha = exact(u), exact(alpha)
    result = Fraction(1)
    for j, row in enumerate(kappa.parts, 1):
        result *= rising(u - Fraction(j - 1) / alpha, row)
        if result == 0:
            break
    return result


def hook_upper_from_fbar(kappa: Partition, alpha: Scalar, n: int) -> Fraction:
    """d'_κ through the f-bar product, defined only when 1/α is a positive integer."""
    alpha = exact(alpha)
    inv = 1 / alpha
    if inv.denominator != 1:
        raise PartitionError(f"f-bar form needs 1/alpha integral, got alpha={alpha}")
    order = int(inv)
    fbar = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            base = 1 + Fraction(j - i - 1) / alpha
            fbar *= rising(base + kappa[i] - kappa[j], order) / rising(base, order)
    return alpha ** kappa.weight * gen_pochhammer(Fraction(n - 1) / alpha + 1, kappa, alpha) / fbar


def complement(kappa: Partition, s: int, n: int) -> Partition:
    """κ^s = (s-κ_N, ..., s-κ_1)."""
    if kappa.length > n or (kappa.parts and kappa.parts[0] > s):
        raise PartitionError("complement undefined")
    return Partition(tuple(s - kappa[i] for i in range(n, 0, -1)))

"""Generalized Chen fractions: formal, exactly evaluable rational functions.

``ChenFraction((s1,...,sk), (i1,...,ik))`` denotes the product over j of
``(x_{i_j} + x_{i_{j+1}} + ... + x_{i_k}) ** (-s_j)``.  Negative exponents
are allowed, so a "fraction" may in fact be a polynomial.

Formal terms are *not* linearly independent as functions (the exponent-zero
fraction in any single variable is the constant 1), so equality of
combinations is decided semantically, by exact rational evaluation on a
deterministic panel of positive points, never by comparing term sets.
Positive coordinates keep every sum-of-variables denominator nonzero.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .algebra import _TermSum, format_composition
from .symbols import ChenSymbol, SymbolLinComb, symbol_product


class VanishingDenominatorError(ArithmeticError):
    """A denominator linear form vanished at the evaluation point."""

    def __init__(self, indices):
        self.indices = tuple(indices)
        form = "+".join(f"x{i}" for i in self.indices)
        super().__init__(f"denominator {form} vanishes at the evaluation point")


@dataclass(frozen=True)
class ChenFraction:
    """One generalized Chen fraction; the unit (both rows empty) is the constant 1."""

    exponents: tuple
    var_indices: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        object.__setattr__(self, "var_indices", tuple(self.var_indices))
        if len(self.exponents) != len(self.var_indices):
            raise ValueError("exponent and variable rows must have equal length")
        for e in self.exponents:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"exponents must be integers, got {e!r}")
        for i in self.var_indices:
            if not isinstance(i, int) or isinstance(i, bool) or i < 1:
                raise ValueError(f"variable indices must be positive integers, got {i!r}")
        if len(set(self.var_indices)) != len(self.var_indices):
            raise ValueError(f"variable indices must be distinct, got {self.var_indices}")

    @property
    def depth(self) -> int:
        return len(self.exponents)

    def __str__(self):
        if not self.exponents:
            return "1"
        top = format_composition(self.exponents)
        bottom = format_composition(self.var_indices)
        return f"f({top};{bottom})"

    def evaluate(self, point: Mapping[int, Fraction]) -> Fraction:
        """Exact value at a rational point assigning every variable index."""
        missing = [i for i in self.var_indices if i not in point]
        if missing:
            raise ValueError(f"no value assigned to variable index {missing[0]}")
        value = Fraction(1)
        suffix = Fraction(0)
        factors = []
        for j in range(self.depth - 1, -1, -1):
            suffix += Fraction(point[self.var_indices[j]])
            factors.append((self.exponents[j], suffix, j))
        for s, linear, j in factors:
            if s > 0:
                if linear == 0:
                    raise VanishingDenominatorError(self.var_indices[j:])
                value /= linear**s
            elif s < 0:
                value *= linear ** (-s)
        return value


FRACTION_UNIT = ChenFraction((), ())


class FractionLinComb(_TermSum):
    """Finite rational sum of Chen fractions (formal terms, see module note)."""

    @staticmethod
    def _key(frac):
        return (len(frac.var_indices), frac.var_indices, frac.exponents)

    @staticmethod
    def _term_str(frac):
        return str(frac)


def F_map(x: SymbolLinComb) -> FractionLinComb:
    """Reinterpret each Chen symbol as the fraction over its label variables."""
    return FractionLinComb._from_clean(
        {ChenFraction(sym.exponents, sym.labels): coef for sym, coef in x.items()}
    )


def evaluate(x, point: Mapping[int, Fraction]) -> Fraction:
    """Exact rational value of a fraction or a combination at ``point``."""
    if isinstance(x, ChenFraction):
        return x.evaluate(point)
    total = Fraction(0)
    for frac, coef in x.items():
        total += Fraction(coef) * frac.evaluate(point)
    return total


def variables(x) -> tuple:
    """Sorted variable indices appearing in a fraction or combination."""
    if isinstance(x, ChenFraction):
        return tuple(sorted(x.var_indices))
    out: set = set()
    for frac in x.support():
        out.update(frac.var_indices)
    return tuple(sorted(out))


def mult_by_linear(x: ChenFraction, direction: str) -> ChenFraction:
    """Multiply (``down``) or divide (``up``) by the full linear form.

    Multiplying by ``x_{i_1}+...+x_{i_k}`` lowers the first exponent by one;
    dividing raises it.  Undefined at depth 0.
    """
    if not x.depth:
        raise ValueError("the unit fraction has no leading linear form")
    if direction == "down":
        delta = -1
    elif direction == "up":
        delta = +1
    else:
        raise ValueError(f"direction must be 'down' or 'up', got {direction!r}")
    return ChenFraction((x.exponents[0] + delta,) + x.exponents[1:], x.var_indices)


def fraction_product(a: ChenFraction, b: ChenFraction) -> FractionLinComb:
    """Product of fractions with disjoint variables, via the symbol lift.

    The result is semantically equal to the pointwise product; every term's
    variable row is a shuffle of the two input rows.
    """
    shared = set(a.var_indices) & set(b.var_indices)
    if shared:
        raise ValueError(f"fractions share variable indices {sorted(shared)}")
    lifted = symbol_product(
        ChenSymbol(a.exponents, a.var_indices), ChenSymbol(b.exponents, b.var_indices)
    )
    return F_map(lifted)


def evaluation_panel(indices: Iterable[int], *, count: int = 8, seed: int = 0) -> list:
    """Deterministic panel of positive rational points for semantic equality.

    The first two points are symmetric (all coordinates 1, then all 1/2); the
    remaining points are pseudo-random with numerators and denominators drawn
    from 1..7, seeded for reproducibility.  All coordinates are positive, so
    no sum-of-variables denominator can vanish on the panel.
    """
    indices = sorted(set(indices))
    rng = random.Random(seed)
    panel = []
    for value in (Fraction(1), Fraction(1, 2))[:count]:
        panel.append({i: value for i in indices})
    while len(panel) < count:
        panel.append({i: Fraction(rng.randint(1, 7), rng.randint(1, 7)) for i in indices})
    return panel


def equal_on_panel(x, y, *, seed: int = 0, count: int = 8) -> bool:
    """Semantic equality of two fractions/combinations on the evaluation panel."""
    shared = sorted(set(variables(x)) | set(variables(y)))
    for point in evaluation_panel(shared, count=count, seed=seed):
        if evaluate(x, point) != evaluate(y, point):
            return False
    return True

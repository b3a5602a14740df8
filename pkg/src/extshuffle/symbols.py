"""Chen symbols: compositions carried over rows of distinct variable labels.

A Chen symbol ``<s1,...,sk; u1,...,uk>`` pairs an integer composition (top
row) with pairwise-distinct positive integer labels (bottom row).  Symbols
with disjoint label sets are *independent*; only independent symbols may be
multiplied.  The product mirrors the extended shuffle recursion on the top
row while the label rows interleave, so every result term's label row is a
shuffle of the two input label rows.  Dropping the label row projects back
onto the composition algebra.

Basis products are memoized under the same contract as the composition
product: values are immutable and the cache tolerates concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LinComb, _TermSum, format_composition


@dataclass(frozen=True)
class ChenSymbol:
    """Two-row basis symbol; the unit has both rows empty."""

    exponents: tuple
    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.exponents) != len(self.labels):
            raise ValueError(
                f"rows must have equal length: {len(self.exponents)} exponents "
                f"vs {len(self.labels)} labels"
            )
        for e in self.exponents:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"exponents must be integers, got {e!r}")
        for u in self.labels:
            if not isinstance(u, int) or isinstance(u, bool) or u < 1:
                raise ValueError(f"labels must be positive integers, got {u!r}")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"labels must be pairwise distinct, got {self.labels}")

    @property
    def depth(self) -> int:
        return len(self.exponents)

    @classmethod
    def unit(cls) -> "ChenSymbol":
        return cls((), ())

    def __str__(self):
        if not self.exponents:
            return "1"
        top = format_composition(self.exponents)
        bottom = format_composition(self.labels)
        return f"<{top};{bottom}>"


SYMBOL_UNIT = ChenSymbol((), ())


class SymbolLinComb(_TermSum):
    """Finite rational sum of Chen symbols, ordered by (labels, exponents)."""

    @staticmethod
    def _key(sym):
        return (len(sym.labels), sym.labels, sym.exponents)

    @staticmethod
    def _term_str(sym):
        return str(sym)

    def to_json_dict(self) -> dict:
        from fractions import Fraction

        return {
            "terms": [
                {
                    "coef": str(Fraction(coef)),
                    "comp": list(sym.exponents),
                    "labels": list(sym.labels),
                }
                for sym, coef in self.terms()
            ]
        }


def independent(a: ChenSymbol, b: ChenSymbol) -> bool:
    """The locality relation: label sets disjoint (the unit meets everything)."""
    return not set(a.labels) & set(b.labels)


def make_independent(a: ChenSymbol, b: ChenSymbol) -> ChenSymbol:
    """Relabel ``b`` with fresh labels above ``max(a.labels)`` if it overlaps ``a``."""
    if independent(a, b):
        return b
    floor = max(a.labels, default=0)
    return ChenSymbol(b.exponents, tuple(range(floor + 1, floor + 1 + b.depth)))


# ---------------------------------------------------------------------------
# the locality product, internally on (exponents, labels) tuple pairs

_symbol_cache: dict = {}


def _measure(s, t):
    # same termination measure as the composition-level recursion
    if not s or not t:
        return (len(s) + len(t), 0)
    s1, t1 = s[0], t[0]
    if s1 == 0 or (s1 > 0 and t1 == 0):
        return (len(s) + len(t), 0)
    if s1 > 0 and t1 > 0:
        return (len(s) + len(t), s1 + t1)
    if s1 > 0:
        return (len(s) + len(t), -t1)
    return (len(s) + len(t), -s1)


def _shift_first(d, delta):
    return {((exp[0] + delta,) + exp[1:], lab): coef for (exp, lab), coef in d.items()}


def _add_into(acc, other, sign=1):
    for term, coef in other.items():
        c = acc.get(term, 0) + sign * coef
        if c:
            acc[term] = c
        else:
            del acc[term]
    return acc


def _symbol_basis_product(su, tv):
    try:
        return _symbol_cache[su, tv]
    except KeyError:
        pass
    result = _compute_symbol_product(su, tv)
    _symbol_cache[su, tv] = result
    return result


def _compute_symbol_product(su, tv):
    s, u = su
    t, v = tv
    if not s:
        return {tv: 1}
    if not t:
        return {su: 1}
    here = _measure(s, t)

    def rec(left, right):
        assert _measure(left[0], right[0]) < here, "recursion measure failed to decrease"
        return _symbol_basis_product(left, right)

    s1, t1 = s[0], t[0]
    if s1 == 0:
        sub = rec((s[1:], u[1:]), tv)
        return {((0,) + exp, (u[0],) + lab): coef for (exp, lab), coef in sub.items()}
    if s1 > 0:
        if t1 == 0:
            sub = rec(su, (t[1:], v[1:]))
            return {((0,) + exp, (v[0],) + lab): coef for (exp, lab), coef in sub.items()}
        if t1 > 0:
            acc = dict(rec(su, ((t1 - 1,) + t[1:], v)))
            _add_into(acc, rec(((s1 - 1,) + s[1:], u), tv))
            return _shift_first(acc, +1)
        # t1 < 0
        acc = _shift_first(rec(su, ((t1 + 1,) + t[1:], v)), -1)
        return _add_into(acc, rec(((s1 - 1,) + s[1:], u), ((t1 + 1,) + t[1:], v)), -1)
    # s1 < 0
    acc = _shift_first(rec(((s1 + 1,) + s[1:], u), tv), -1)
    return _add_into(acc, rec(((s1 + 1,) + s[1:], u), ((t1 - 1,) + t[1:], v)), -1)


def symbol_product(a: ChenSymbol, b: ChenSymbol) -> SymbolLinComb:
    """Locality product of two independent Chen symbols.

    Raises ``ValueError`` on overlapping label sets: the product is only
    defined on independent pairs, and a partial value would silently poison
    downstream fraction identities.
    """
    if not independent(a, b):
        shared = sorted(set(a.labels) & set(b.labels))
        raise ValueError(f"symbols are not independent, shared labels {shared}")
    raw = _symbol_basis_product((a.exponents, a.labels), (b.exponents, b.labels))
    return SymbolLinComb._from_clean(
        {ChenSymbol(exp, lab): coef for (exp, lab), coef in raw.items()}
    )


def opS_I(x: SymbolLinComb) -> SymbolLinComb:
    """Increment each term's first exponent; undefined on the unit symbol."""
    out = {}
    for sym, coef in x.items():
        if not sym.depth:
            raise ValueError("first-exponent increment is undefined on the unit symbol")
        out[ChenSymbol((sym.exponents[0] + 1,) + sym.exponents[1:], sym.labels)] = coef
    return SymbolLinComb._from_clean(out)


def opS_J(x: SymbolLinComb) -> SymbolLinComb:
    """Decrement each term's first exponent; the unit symbol maps to zero."""
    out = {}
    for sym, coef in x.items():
        if sym.depth:
            out[ChenSymbol((sym.exponents[0] - 1,) + sym.exponents[1:], sym.labels)] = coef
    return SymbolLinComb._from_clean(out)


def phi_project(x: SymbolLinComb) -> LinComb:
    """Forget the label rows, merging coefficients of equal top rows."""
    acc: dict = {}
    for sym, coef in x.items():
        c = acc.get(sym.exponents, 0) + coef
        if c:
            acc[sym.exponents] = c
        else:
            del acc[sym.exponents]
    return LinComb._from_clean(acc)

"""The extended shuffle product on integer compositions.

The product is total on all integer compositions and is determined by a
five-case recursion on the pair of leading entries ``(s1, t1)``:

* Case 1 (``s1 == 0``): peel the zero, ``[0,s'] x [t] = [0, s' x [t]]``.
* Case 2 (``s1 > 0, t1 == 0``): peel the zero on the right symmetrically.
* Case 3 (``s1 > 0, t1 > 0``): recurse on ``s1 + t1`` through ``op_I``,
  the Rota-Baxter (integration-by-parts) shape
  ``a x b = I(a x J(b)) + I(J(a) x b)``.
* Case 4 (``s1 > 0, t1 < 0``): recurse on ``|t1|`` through ``op_J``,
  rearranging the Leibniz rule ``J(a x b) = J(a) x b + a x J(b)``.
* Case 5 (``s1 < 0``): recurse on ``|s1|``, Leibniz on the left.

The unit is a two-sided identity, every result term has depth equal to the
sum of the factors' depths, and the restriction to compositions with all
entries >= 1 agrees with the classical word shuffle pulled back along the
encoding ``rho`` (implemented independently below as an oracle).

Basis products have integer coefficients; they are memoized, and the cache
is safe to share between threads (a lost race only recomputes a value).
"""

from __future__ import annotations

from .algebra import Composition, LinComb, composition

Word = tuple
"""A word over the two-letter alphabet, as a tuple of 0/1 integers."""

X0, X1 = 0, 1


# ---------------------------------------------------------------------------
# extended shuffle product


def _measure(a, b):
    """Termination measure: (depth sum, per-case recursion quantity).

    Strictly decreases lexicographically at every recursive call of
    ``_basis_product``, which makes the well-foundedness of the five-case
    recursion executable as an assertion.
    """
    if not a or not b:
        return (len(a) + len(b), 0)
    s1, t1 = a[0], b[0]
    if s1 == 0 or (s1 > 0 and t1 == 0):
        return (len(a) + len(b), 0)
    if s1 > 0 and t1 > 0:
        return (len(a) + len(b), s1 + t1)
    if s1 > 0:
        return (len(a) + len(b), -t1)
    return (len(a) + len(b), -s1)


def _add_into(acc, other, sign=1):
    for comp, coef in other.items():
        c = acc.get(comp, 0) + sign * coef
        if c:
            acc[comp] = c
        else:
            del acc[comp]
    return acc


def _shift_first(d, delta):
    # first-entry shift is injective on compositions, so no merging happens
    return {(comp[0] + delta,) + comp[1:]: coef for comp, coef in d.items()}


_shuffle_cache: dict = {}


def _basis_product(a, b):
    try:
        return _shuffle_cache[a, b]
    except KeyError:
        pass
    result = _compute_product(a, b)
    _shuffle_cache[a, b] = result
    return result


def _compute_product(a, b):
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    here = _measure(a, b)

    def rec(u, v):
        assert _measure(u, v) < here, "recursion measure failed to decrease"
        return _basis_product(u, v)

    s1, t1 = a[0], b[0]
    if s1 == 0:
        return {(0,) + comp: coef for comp, coef in rec(a[1:], b).items()}
    if s1 > 0:
        if t1 == 0:
            return {(0,) + comp: coef for comp, coef in rec(a, b[1:]).items()}
        if t1 > 0:
            acc = dict(rec(a, (t1 - 1,) + b[1:]))
            _add_into(acc, rec((s1 - 1,) + a[1:], b))
            return _shift_first(acc, +1)
        # t1 < 0
        acc = _shift_first(rec(a, (t1 + 1,) + b[1:]), -1)
        return _add_into(acc, rec((s1 - 1,) + a[1:], (t1 + 1,) + b[1:]), -1)
    # s1 < 0
    acc = _shift_first(rec((s1 + 1,) + a[1:], b), -1)
    return _add_into(acc, rec((s1 + 1,) + a[1:], (t1 - 1,) + b[1:]), -1)


def ext_shuffle(a: Composition, b: Composition) -> LinComb:
    """Extended shuffle product of two basis compositions."""
    a = composition(a)
    b = composition(b)
    return LinComb._from_clean(_basis_product(a, b))


def ext_shuffle_lin(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear extension of :func:`ext_shuffle` to linear combinations."""
    acc: dict = {}
    for ta, ca in x.items():
        for tb, cb in y.items():
            c = ca * cb
            for comp, k in _basis_product(ta, tb).items():
                v = acc.get(comp, 0) + c * k
                if v:
                    acc[comp] = v
                else:
                    del acc[comp]
    return LinComb._from_clean(acc)


def is_leading_positive(x: LinComb) -> bool:
    """Whether every term has depth >= 1 and a positive first entry.

    Leading-positive combinations are closed under the product; the zero
    combination is vacuously leading positive.
    """
    return all(comp and comp[0] > 0 for comp in x.support())


# ---------------------------------------------------------------------------
# classical word shuffle, the independent oracle on all-positive compositions


def rho_encode(comp: Composition) -> Word:
    """Encode ``[s1,...,sk]`` as the word ``x0^(s1-1) x1 ... x0^(sk-1) x1``.

    Only defined for entries >= 1; the image always ends with ``x1``.
    """
    letters = []
    for e in comp:
        if e < 1:
            raise ValueError(f"word encoding needs entries >= 1, got {e}")
        letters.extend([X0] * (e - 1))
        letters.append(X1)
    return tuple(letters)


def rho_decode(word: Word) -> Composition:
    """Inverse of :func:`rho_encode`; the word must be empty or end in x1."""
    if word and word[-1] != X1:
        raise ValueError("only words ending in x1 encode a composition")
    entries = []
    run = 0
    for letter in word:
        if letter == X0:
            run += 1
        elif letter == X1:
            entries.append(run + 1)
            run = 0
        else:
            raise ValueError(f"letters must be 0 or 1, got {letter!r}")
    return tuple(entries)


_word_cache: dict = {}


def _word_shuffle(u, v):
    try:
        return _word_cache[u, v]
    except KeyError:
        pass
    if not u:
        result = {v: 1}
    elif not v:
        result = {u: 1}
    else:
        acc: dict = {}
        for w, c in _word_shuffle(u[1:], v).items():
            key = (u[0],) + w
            acc[key] = acc.get(key, 0) + c
        for w, c in _word_shuffle(u, v[1:]).items():
            key = (v[0],) + w
            acc[key] = acc.get(key, 0) + c
        result = acc
    _word_cache[u, v] = result
    return result


def word_shuffle(u: Word, v: Word) -> dict:
    """Classical shuffle ``a w1 x b w2 = a(w1 x b w2) + b(a w1 x w2)``.

    Returns a map word -> integer multiplicity.  Kept independent of the
    composition-level recursion so it can serve as an oracle for it.
    """
    return dict(_word_shuffle(tuple(u), tuple(v)))


def word_to_str(word: Word) -> str:
    return "".join(str(letter) for letter in word)


def word_from_str(text: str) -> Word:
    if not set(text) <= {"0", "1"}:
        raise ValueError(f"words are strings over 0/1, got {text!r}")
    return tuple(int(ch) for ch in text)


# ---------------------------------------------------------------------------
# quasi-shuffle (stuffle) product

_stuffle_cache: dict = {}


def _stuffle_basis(a, b):
    try:
        return _stuffle_cache[a, b]
    except KeyError:
        pass
    if not a:
        result = {b: 1}
    elif not b:
        result = {a: 1}
    else:
        acc: dict = {}
        for comp, c in _stuffle_basis(a[1:], b).items():
            key = (a[0],) + comp
            acc[key] = acc.get(key, 0) + c
        for comp, c in _stuffle_basis(a, b[1:]).items():
            key = (b[0],) + comp
            acc[key] = acc.get(key, 0) + c
        for comp, c in _stuffle_basis(a[1:], b[1:]).items():
            key = (a[0] + b[0],) + comp
            acc[key] = acc.get(key, 0) + c
        result = acc
    _stuffle_cache[a, b] = result
    return result


def stuffle(a: Composition, b: Composition) -> LinComb:
    """Quasi-shuffle product: interleave entries, allowing pairwise merges.

    ``[s1,s'] * [t1,t'] = [s1, s'*[t1,t']] + [t1, [s1,s']*t'] + [s1+t1, s'*t']``
    with the unit as identity, applied verbatim at every integer entry.
    """
    a = composition(a)
    b = composition(b)
    return LinComb._from_clean(dict(_stuffle_basis(a, b)))

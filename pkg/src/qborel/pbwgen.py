"""Structure constants and closed-form shuffle images of PBW generators.

For series A and C every bracketed word v[k,m] evaluates to a scalar
multiple of the single descending comonomial,

    v[k,m] = alpha_k^m (v(m,k)),
    alpha_k^m = eps_k^m (q-1)^{m-k} prod_{k <= i < j <= m} p_ij,

with the exceptional factor eps equal to 1+q when the interval crosses the
fold (m != phi(k)) and 1+q^{-1} exactly at m = phi(k) != n.  For series D
the image is the matching one- or two-comonomial combination

    e[k,m] = alpha_k^m { (e(m,k)) + p_{n-1,n} (e'(m,k)) },

where the product in alpha runs over the pairs of extended letters that
actually occur in e(k,m), the (q-1) exponent is length-1, and the
exceptional factor is q^{-1} at m = phi(k).  The degenerate series-D pair
(n, n) has e[n,n] = [[x_n, x_n]] = 0, so its alpha and closed form are the
zero element.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from functools import cmp_to_key

from .datum import QuantumDatum
from .freeword import FreeElem, pbw_bracketing, word_greater
from .shuffle import ShuffleElem, shuffle_letter_mul


def epsilon(datum: QuantumDatum, k: int, m: int):
    """The exceptional scalar factor of alpha."""
    datum._check_interval(k, m)
    n = datum.n
    if datum.series == "A":
        return datum.one()
    if datum.series == "C":
        if m == datum.phi(k):
            if m != n:
                return datum.one() + datum.q_power(-1)
            return datum.one()
        if k <= n <= m:
            return datum.one() + datum.q_power(1)
        return datum.one()
    # series D
    if datum.has_nn1(k, m) and m == datum.phi(k):
        return datum.q_power(-1)
    return datum.one()


def alpha(datum: QuantumDatum, k: int, m: int):
    """Scalar relating the bracketed word to its descending comonomial(s).

    Uniformly eps * (q-1)^{len-1} * prod of p over the ordered pairs of
    extended letters of the underlying word, folded through the table.
    Zero for the degenerate series-D pair (n, n).
    """
    datum._check_interval(k, m)
    if datum.series == "D" and k == m == datum.n:
        return datum.zero()
    letters = datum.series_word(k, m)
    out = epsilon(datum, k, m) * (datum.q_power(1) - datum.one()) ** (len(letters) - 1)
    for a in range(len(letters)):
        for b in range(a + 1, len(letters)):
            out = out * datum.p_letters(letters[a], letters[b])
    return out


def tau_table(datum: QuantumDatum, k: int, m: int) -> dict:
    """Coproduct coefficients tau_i, i = k..m-1, in closed form.

    Series A: all 1.  Series C: 1 except tau_{n-1} = 1+q^{-1} when m = n
    and tau_n = 1+q^{-1} when k = n.  Series D: 1 except tau_{n-1} = 0
    when m = n, tau_n = 0 when k = n, and tau_{n-1} = p_{n,n-1} otherwise.
    """
    datum._check_interval(k, m)
    n = datum.n
    one = datum.one()
    taus = {i: one for i in range(k, m)}
    if datum.series == "C":
        if m == n and n - 1 in taus:
            taus[n - 1] = one + datum.q_power(-1)
        if k == n and n in taus:
            taus[n] = one + datum.q_power(-1)
    elif datum.series == "D":
        if n - 1 in taus:
            taus[n - 1] = datum.zero() if m == n else datum.p_phys(n, n - 1)
        if k == n and n in taus:
            taus[n] = datum.zero()
    return taus


def closed_form_image(datum: QuantumDatum, k: int, m: int) -> ShuffleElem:
    """alpha times the descending comonomial(s) of the interval."""
    datum._check_interval(k, m)
    a = alpha(datum, k, m)
    if datum.series == "D":
        if k == m == datum.n:
            return ShuffleElem.zero()
        rev = tuple(reversed(datum.word_e(k, m)))
        img = ShuffleElem.comonomial(datum, rev, a)
        if datum.has_nn1(k, m):
            rev_prime = tuple(reversed(datum.word_e_prime(k, m)))
            img = img + ShuffleElem.comonomial(
                datum, rev_prime, a * datum.p_phys(datum.n - 1, datum.n))
        return img
    rev = tuple(reversed(datum.word_v(k, m)))
    return ShuffleElem.comonomial(datum, rev, a)


_image_cache: "weakref.WeakKeyDictionary[QuantumDatum, dict]" = \
    weakref.WeakKeyDictionary()


def generator_image(datum: QuantumDatum, k: int, m: int) -> ShuffleElem:
    """Shuffle image of pbw_bracketing(k, m), computed bracket by bracket.

    Brackets in the bracketed word always pair an already-built element
    with a single letter, so the image follows from the letter products
    alone:  [E, x] maps to E(x) - p(E, x) (x)E and the double bracket
    scales the second term by q^{-1}.  Agrees with
    eval_free(pbw_bracketing(k, m)) exactly (tested), while staying
    polynomial in the interval length.  Images are memoized per datum
    (values are immutable, so sharing is safe).
    """
    cache = _image_cache.setdefault(datum, {})
    if (k, m) not in cache:
        cache[(k, m)] = _generator_image(datum, k, m)
    return cache[(k, m)]


def _generator_image(datum: QuantumDatum, k: int, m: int) -> ShuffleElem:
    n = datum.n
    if datum.series == "D" and k == m == n:
        return ShuffleElem.zero()
    word = datum.series_word(k, m)
    if len(word) == 1:
        return ShuffleElem.letter(datum, word[0])

    def bracket_with_letter(elem, deg, letter, qinv_factor=None):
        phys = datum.physical(letter)
        dletter = [0] * n
        dletter[phys - 1] = 1
        p = datum.p_deg(deg, dletter)
        if qinv_factor is not None:
            p = p * qinv_factor
        return (shuffle_letter_mul(datum, "right", elem, letter)
                - shuffle_letter_mul(datum, "left", elem, letter).scale(p))

    def letter_bracket_with(elem, deg, letter):
        phys = datum.physical(letter)
        dletter = [0] * n
        dletter[phys - 1] = 1
        p = datum.p_deg(dletter, deg)
        return (shuffle_letter_mul(datum, "left", elem, letter)
                - shuffle_letter_mul(datum, "right", elem, letter).scale(p))

    if datum.series == "A" or m < datum.phi(k):
        elem = ShuffleElem.letter(datum, word[0])
        deg = list(datum.multidegree(word[:1]))
        for letter in word[1:]:
            elem = bracket_with_letter(elem, deg, letter)
            deg[datum.physical(letter) - 1] += 1
        return elem
    if m > datum.phi(k):
        elem = ShuffleElem.letter(datum, word[-1])
        deg = list(datum.multidegree(word[-1:]))
        for letter in reversed(word[:-1]):
            elem = letter_bracket_with(elem, deg, letter)
            deg[datum.physical(letter) - 1] += 1
        return elem
    # m == phi(k): double bracket of the left-nested prefix with x_m
    prefix = generator_image(datum, k, m - 1)
    deg = datum.multidegree(datum.series_word(k, m - 1))
    return bracket_with_letter(prefix, deg, m, qinv_factor=datum.q_power(-1))


@dataclass(frozen=True)
class PBWGenerator:
    """One PBW generator: interval, underlying word, bracketed element."""

    k: int
    m: int
    word: tuple
    element: FreeElem = field(compare=False)

    @property
    def degree(self) -> int:
        return len(self.word)

    @property
    def label(self) -> str:
        return f"[{self.k},{self.m}]"


def pbw_intervals(datum: QuantumDatum) -> list:
    """The (k, m) intervals of the PBW family, in no particular order."""
    n = datum.n
    out = []
    if datum.series == "A":
        return [(k, m) for k in range(1, n + 1) for m in range(k, n + 1)]
    if datum.series == "C":
        return [(k, m) for k in range(1, n + 1)
                for m in range(k, datum.phi(k) + 1)]
    return [(k, m) for k in range(1, n) for m in range(k, datum.phi(k))]


def pbw_generators(datum: QuantumDatum) -> list:
    """The ordered PBW family, ascending in the word order.

    Series C takes all v[k,m] with k <= m <= phi(k); series D all e[k,m]
    with k <= m < phi(k); series A all v[k,m] with k <= m <= n.  Their
    count equals the number of positive roots.
    """
    gens = []
    for k, m in pbw_intervals(datum):
        word = datum.series_word(k, m)
        gens.append(PBWGenerator(k, m, word, pbw_bracketing(datum, k, m)))

    def cmp(a: PBWGenerator, b: PBWGenerator) -> int:
        wa = tuple(datum.physical(i) for i in a.word)
        wb = tuple(datum.physical(i) for i in b.word)
        if wa == wb:
            return 0
        return 1 if word_greater(wa, wb) else -1

    return sorted(gens, key=cmp_to_key(cmp))


@dataclass(frozen=True)
class StructureConstants:
    """alpha, the exceptional epsilon factor, and the tau table of (k, m)."""

    alpha: object
    epsilon: object
    tau: dict


def structure_constants(datum: QuantumDatum, k: int, m: int) -> StructureConstants:
    return StructureConstants(alpha(datum, k, m), epsilon(datum, k, m),
                              tau_table(datum, k, m))

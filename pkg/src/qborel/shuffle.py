"""The braided shuffle algebra: letter products, evaluation, coproduct.

A comonomial (z_1 z_2 ... z_m) is the tensor z_1 (x) ... (x) z_m viewed as
an element of the shuffle algebra; it is stored as the tuple of physical
letter indices, since folded letters denote the same generator.  The letter
products follow

    (w)(x_i) = sum_{uv=w} p(x_i, v)^{-1} (u x_i v),
    (x_i)(w) = sum_{uv=w} p(u, x_i)^{-1} (u x_i v),

and the braided coproduct is deconcatenation over all split points.  The
map x_i -> (x_i) extends to the evaluation homomorphism from free-algebra
elements, computed word by word through right letter products.
"""

from __future__ import annotations

from typing import Sequence

from .coeffring import scalar_is_zero, scalar_str
from .datum import QuantumDatum
from .freeword import FreeElem


class ShuffleElem:
    """Linear combination of comonomials, canonical (no zero coefficients)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = {z: c for z, c in terms.items() if not scalar_is_zero(c)}

    @classmethod
    def zero(cls) -> "ShuffleElem":
        return cls({})

    @classmethod
    def unit(cls, datum: QuantumDatum) -> "ShuffleElem":
        return cls({(): datum.one()})

    @classmethod
    def letter(cls, datum: QuantumDatum, i: int) -> "ShuffleElem":
        return cls({(datum.physical(i),): datum.one()})

    @classmethod
    def comonomial(cls, datum: QuantumDatum, letters: Sequence[int], coeff=None) -> "ShuffleElem":
        key = tuple(datum.physical(i) for i in letters)
        return cls({key: datum.one() if coeff is None else coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "ShuffleElem") -> "ShuffleElem":
        out = dict(self.terms)
        for z, c in other.terms.items():
            s = out.get(z, 0) + c
            if scalar_is_zero(s):
                out.pop(z, None)
            else:
                out[z] = s
        return ShuffleElem(out)

    def __sub__(self, other: "ShuffleElem") -> "ShuffleElem":
        return self + (-other)

    def __neg__(self) -> "ShuffleElem":
        return ShuffleElem({z: -c for z, c in self.terms.items()})

    def scale(self, c) -> "ShuffleElem":
        if scalar_is_zero(c):
            return ShuffleElem.zero()
        return ShuffleElem({z: c * cz for z, cz in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, ShuffleElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda it: (len(it[0]), it[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for z, c in self.sorted_terms():
            cs = scalar_str(c)
            if " + " in cs or " - " in cs:
                cs = f"({cs})"
            mono = "(" + " ".join(f"x{i}" for i in z) + ")" if z else "(1)"
            bits.append(f"{cs} * {mono}")
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"<ShuffleElem {self}>"


def comonomial_degree(z: tuple, n: int) -> tuple:
    deg = [0] * n
    for i in z:
        deg[i - 1] += 1
    return tuple(deg)


def shuffle_letter_mul(datum: QuantumDatum, side: str, w: ShuffleElem,
                       i: int) -> ShuffleElem:
    """Right product (w)(x_i) or left product (x_i)(w), per the split rule."""
    phys = datum.physical(i)
    row_inv = datum._p_inv[phys - 1]
    col = [datum._p_inv[a][phys - 1] for a in range(datum.n)]
    out: dict = {}
    if side == "right":
        for z, c in w.terms.items():
            acc = c
            for s in range(len(z), -1, -1):
                key = z[:s] + (phys,) + z[s:]
                cur = out.get(key, 0) + acc
                if scalar_is_zero(cur):
                    out.pop(key, None)
                else:
                    out[key] = cur
                if s:
                    acc = acc * row_inv[z[s - 1] - 1]
    elif side == "left":
        for z, c in w.terms.items():
            acc = c
            for s in range(len(z) + 1):
                key = z[:s] + (phys,) + z[s:]
                cur = out.get(key, 0) + acc
                if scalar_is_zero(cur):
                    out.pop(key, None)
                else:
                    out[key] = cur
                if s < len(z):
                    acc = acc * col[z[s] - 1]
    else:
        raise ValueError("side must be 'right' or 'left'")
    return ShuffleElem(out)


def eval_word(datum: QuantumDatum, word: Sequence[int]) -> ShuffleElem:
    """Image of one word: ((...((x_{z_1})(x_{z_2}))...)(x_{z_l}))."""
    out = ShuffleElem.unit(datum)
    for letter in word:
        out = shuffle_letter_mul(datum, "right", out, letter)
    return out


def eval_free(datum: QuantumDatum, f: FreeElem) -> ShuffleElem:
    """The evaluation homomorphism x_i -> (x_i), extended linearly."""
    total = ShuffleElem.zero()
    for word, coeff in f.terms.items():
        total = total + eval_word(datum, word).scale(coeff)
    return total


class BraidedTensor:
    """Canonical sum of (left comonomial, right comonomial) -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = {k: c for k, c in terms.items() if not scalar_is_zero(c)}

    @classmethod
    def zero(cls) -> "BraidedTensor":
        return cls({})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "BraidedTensor") -> "BraidedTensor":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if scalar_is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return BraidedTensor(out)

    def __sub__(self, other: "BraidedTensor") -> "BraidedTensor":
        return self + other.scale_int(-1)

    def scale(self, c) -> "BraidedTensor":
        if scalar_is_zero(c):
            return BraidedTensor.zero()
        return BraidedTensor({k: c * ck for k, ck in self.terms.items()})

    def scale_int(self, c: int) -> "BraidedTensor":
        return BraidedTensor({k: c * ck for k, ck in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, BraidedTensor) and self.terms == other.terms

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda it: (len(it[0][0]), it[0][0], len(it[0][1]), it[0][1]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (l, r), c in self.sorted_terms():
            cs = scalar_str(c)
            if " + " in cs or " - " in cs:
                cs = f"({cs})"
            lm = "(" + " ".join(f"x{i}" for i in l) + ")" if l else "(1)"
            rm = "(" + " ".join(f"x{i}" for i in r) + ")" if r else "(1)"
            bits.append(f"{cs} * {lm}(x){rm}")
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"<BraidedTensor {self}>"


def braided_coproduct(s: ShuffleElem, reduced: bool = False) -> BraidedTensor:
    """Deconcatenation over all split points of every comonomial.

    With ``reduced`` the two extreme splits u (x) 1 and 1 (x) u are dropped.
    """
    out: dict = {}
    for z, c in s.terms.items():
        lo = 1 if reduced else 0
        hi = len(z) - 1 if reduced else len(z)
        for i in range(lo, hi + 1):
            key = (z[:i], z[i:])
            cur = out.get(key, 0) + c
            if scalar_is_zero(cur):
                out.pop(key, None)
            else:
                out[key] = cur
    return BraidedTensor(out)


def tensor_of(left: ShuffleElem, right: ShuffleElem) -> BraidedTensor:
    """The outer product sum of (left term) (x) (right term)."""
    out: dict = {}
    for zl, cl in left.terms.items():
        for zr, cr in right.terms.items():
            out[(zl, zr)] = cl * cr
    return BraidedTensor(out)


def tensor_project(t: BraidedTensor, right_deg: Sequence[int]) -> BraidedTensor:
    """Sub-sum of terms whose right component has the given multidegree."""
    n = len(right_deg)
    want = tuple(right_deg)
    return BraidedTensor({
        k: c for k, c in t.terms.items()
        if comonomial_degree(k[1], n) == want
    })


def tensor_project_pair(t: BraidedTensor, left_deg: Sequence[int],
                        right_deg: Sequence[int]) -> BraidedTensor:
    """Sub-sum with both component multidegrees prescribed."""
    n = len(right_deg)
    wl, wr = tuple(left_deg), tuple(right_deg)
    return BraidedTensor({
        k: c for k, c in t.terms.items()
        if comonomial_degree(k[0], n) == wl and comonomial_degree(k[1], n) == wr
    })

"""Exact sparse arithmetic in the Laurent ring Z[q^{+-1}, t_ij^{+-1}].

Every scalar of the package lives in this commutative ring: ``q`` is the
quantization parameter and the ``t_ij`` (one for each pair 1 <= i < j <= n)
are the free multiparameters of the bicharacter table.  Coefficients are
arbitrary-precision integers; rationals appear only when a polynomial is
evaluated at a rational point.  All values are immutable after construction
and all operations are pure, so they can be shared freely between workers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping


class VarSetMismatch(ValueError):
    """Raised when two polynomials over different variable sets are mixed."""


class NonDivisible(ArithmeticError):
    """Raised when an exact quotient does not exist in the Laurent ring."""


class DivisionByZero(ZeroDivisionError):
    """Raised when dividing by the zero polynomial."""


class MissingAssignment(KeyError):
    """Raised when evaluation lacks a value for a variable that occurs."""


class ZeroAssignment(ValueError):
    """Raised when a Laurent variable is assigned zero (it must be a unit)."""


class PolyParseError(ValueError):
    """Raised on malformed polynomial text; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class VarSet:
    """The variables q, t_12, t_13, ..., t_{n-1,n} of a rank-n datum.

    Variable identity is the pair (i, j) with i < j; there is no t_ji.
    Internally variables are numbered 0..nvars-1 with q first and the t_ij
    in lexicographic (i, j) order, which also fixes the canonical monomial
    order (graded lex on exponent vectors, q coordinate first).
    """

    __slots__ = ("n", "names", "_pos")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("rank must be a positive integer")
        self.n = n
        names = ["q"]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                names.append(f"t_{i}_{j}")
        self.names = tuple(names)
        self._pos = {nm: k for k, nm in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._pos[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} for rank {self.n}") from None

    def t_index(self, i: int, j: int) -> int:
        if not (1 <= i < j <= self.n):
            raise KeyError(f"no variable t_{i}_{j} at rank {self.n}")
        return self._pos[f"t_{i}_{j}"]

    def __eq__(self, other) -> bool:
        return isinstance(other, VarSet) and self.n == other.n

    def __hash__(self) -> int:
        return hash(("VarSet", self.n))

    def __repr__(self) -> str:
        return f"VarSet(n={self.n})"


def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class LaurentPoly:
    """A canonical sparse element of Z[q^{+-1}, t_ij^{+-1}].

    ``terms`` maps dense exponent tuples (one slot per variable, negative
    entries allowed) to nonzero integer coefficients.  Equality is exact
    term-map equality; no zero coefficient is ever stored.
    """

    __slots__ = ("vs", "terms", "_hash")

    def __init__(self, vs: VarSet, terms: Mapping[tuple, int]):
        self.vs = vs
        self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vs: VarSet) -> "LaurentPoly":
        return cls(vs, {})

    @classmethod
    def integer(cls, vs: VarSet, c: int) -> "LaurentPoly":
        if c == 0:
            return cls.zero(vs)
        return cls(vs, {(0,) * vs.nvars: c})

    @classmethod
    def one(cls, vs: VarSet) -> "LaurentPoly":
        return cls.integer(vs, 1)

    @classmethod
    def var(cls, vs: VarSet, name: str, exp: int = 1, coeff: int = 1) -> "LaurentPoly":
        e = [0] * vs.nvars
        e[vs.index(name)] = exp
        return cls(vs, {tuple(e): coeff})

    @classmethod
    def q(cls, vs: VarSet, exp: int = 1) -> "LaurentPoly":
        return cls.var(vs, "q", exp)

    @classmethod
    def t(cls, vs: VarSet, i: int, j: int, exp: int = 1) -> "LaurentPoly":
        e = [0] * vs.nvars
        e[vs.t_index(i, j)] = exp
        return cls(vs, {tuple(e): 1})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.vs.nvars: 1}

    def is_monomial(self) -> bool:
        """True when the polynomial is a single term."""
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        """True for +-(single monomial), the invertible elements of the ring."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: "LaurentPoly") -> None:
        if self.vs != other.vs:
            raise VarSetMismatch(f"cannot mix {self.vs!r} and {other.vs!r}")

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPoly.integer(self.vs, other)
        return NotImplemented

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(self.vs, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.vs, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPoly.zero(self.vs)
        if len(b) == 1:
            (be, bc), = b.items()
            return LaurentPoly(
                self.vs,
                {tuple(map(sum, zip(e, be))): c * bc for e, c in a.items()},
            )
        if len(a) == 1:
            return other * self
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(map(sum, zip(ea, eb)))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(self.vs, out)

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if not isinstance(exp, int):
            return NotImplemented
        if exp < 0:
            return self.inverse() ** (-exp)
        result = LaurentPoly.one(self.vs)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        """Inverse of a unit (+- a single monomial)."""
        if not self.is_unit():
            raise NonDivisible(f"{self} is not a unit of the Laurent ring")
        (e, c), = self.terms.items()
        return LaurentPoly(self.vs, {tuple(-x for x in e): c})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == LaurentPoly.integer(self.vs, other).terms
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vs == other.vs and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vs, frozenset(self.terms.items())))
        return self._hash

    # -- division ----------------------------------------------------------

    def div_exact(self, b) -> "LaurentPoly":
        """Exact quotient c with c * b == self, else NonDivisible.

        Works by shifting both operands to honest polynomials with zero
        minimum exponent in each variable (the quotient of such polynomials
        is again of that shape because valuations add), then running
        leading-term division over Q and checking integrality.
        """
        b = self._coerce(b)
        if b is NotImplemented:
            raise TypeError("div_exact expects a LaurentPoly or int")
        if b.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.vs)
        if len(b.terms) == 1:
            (be, bc), = b.terms.items()
            out = {}
            for ae, ac in self.terms.items():
                quo, rem = divmod(ac, bc)
                if rem:
                    raise NonDivisible(f"coefficient {ac} not divisible by {bc}")
                out[tuple(x - y for x, y in zip(ae, be))] = quo
            return LaurentPoly(self.vs, out)

        nv = self.vs.nvars
        sa = [min(e[v] for e in self.terms) for v in range(nv)]
        sb = [min(e[v] for e in b.terms) for v in range(nv)]
        rem = {
            tuple(x - s for x, s in zip(e, sa)): Fraction(c)
            for e, c in self.terms.items()
        }
        bshift = {tuple(x - s for x, s in zip(e, sb)): c for e, c in b.terms.items()}
        lb = max(bshift, key=_grlex_key)
        lc = bshift[lb]
        quo: dict = {}
        while rem:
            la = max(rem, key=_grlex_key)
            d = tuple(x - y for x, y in zip(la, lb))
            if any(x < 0 for x in d):
                raise NonDivisible("no exact Laurent quotient")
            f = rem[la] / lc
            quo[d] = f
            for eb, cb in bshift.items():
                e = tuple(map(sum, zip(d, eb)))
                s = rem.get(e, 0) - f * cb
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        shift = tuple(x - y for x, y in zip(sa, sb))
        out = {}
        for e, f in quo.items():
            if f.denominator != 1:
                raise NonDivisible("quotient has non-integer coefficients")
            out[tuple(map(sum, zip(e, shift)))] = int(f)
        return LaurentPoly(self.vs, out)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, assignment: Mapping[str, "Fraction | int"]) -> Fraction:
        """Exact value at a rational point; a ring homomorphism.

        Every variable occurring in a term must be assigned a nonzero
        rational (negative exponents need invertible values).
        """
        values = {}
        for name, v in assignment.items():
            v = Fraction(v)
            if v == 0:
                raise ZeroAssignment(f"{name} assigned 0; Laurent variables must be invertible")
            values[self.vs.index(name)] = v
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, exp in enumerate(e):
                if exp == 0:
                    continue
                if v not in values:
                    raise MissingAssignment(self.vs.names[v])
                term *= values[v] ** exp
            total += term
        return total

    # -- text form ---------------------------------------------------------

    def __str__(self) -> str:
        """Canonical text form, e.g. ``(q^2-1)*t_1_2^-1 + q``.

        Terms are grouped by their t-monomial; groups are ordered by their
        graded-lex-leading term (q coordinate first), and the q-polynomial
        of each group is written with descending exponents.
        """
        if not self.terms:
            return "0"
        groups: dict = {}
        for e, c in self.terms.items():
            groups.setdefault(e[1:], {})[e[0]] = c

        def lead_key(item):
            texps, qpoly = item
            qe = max(qpoly)
            return (qe + sum(texps), (qe,) + texps)

        pieces = []
        for texps, qpoly in sorted(groups.items(), key=lead_key, reverse=True):
            tfactors = []
            for pos, exp in enumerate(texps):
                if exp == 0:
                    continue
                name = self.vs.names[pos + 1]
                tfactors.append(name if exp == 1 else f"{name}^{exp}")
            tstr = "*".join(tfactors)
            qstr = _render_qpoly(qpoly)
            if not tstr:
                pieces.append(qstr)
            elif len(qpoly) > 1:
                pieces.append(f"({qstr})*{tstr}")
            elif qstr == "1":
                pieces.append(tstr)
            elif qstr == "-1":
                pieces.append(f"-{tstr}")
            else:
                pieces.append(f"{qstr}*{tstr}")
        out = pieces[0]
        for p in pieces[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self) -> str:
        return f"<LaurentPoly {self}>"


def _render_qpoly(qpoly: Mapping[int, int]) -> str:
    parts = []
    for qe in sorted(qpoly, reverse=True):
        c = qpoly[qe]
        if qe == 0:
            s = str(c)
        else:
            base = "q" if qe == 1 else f"q^{qe}"
            if c == 1:
                s = base
            elif c == -1:
                s = f"-{base}"
            else:
                s = f"{c}*{base}"
        parts.append(s)
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += "-" + p[1:]
        else:
            out += "+" + p
    return out


# -- parsing ---------------------------------------------------------------

def parse_poly(text: str, vs: VarSet) -> LaurentPoly:
    """Parse the canonical text form back into a polynomial.

    Accepts the grammar  expr := ['-'] term (('+'|'-') term)* ;
    term := factor ('*' factor)* ; factor := base ['^' int] ;
    base := INT | 'q' | 't_i_j' | '(' expr ')'.
    """
    return _PolyParser(text, vs).parse()


class _PolyParser:
    def __init__(self, text: str, vs: VarSet):
        self.text = text
        self.vs = vs
        self.pos = 0

    def parse(self) -> LaurentPoly:
        value = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise PolyParseError("trailing input", self.pos)
        return value

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expr(self) -> LaurentPoly:
        sign = 1
        if self._peek() == "-":
            self.pos += 1
            sign = -1
        value = self._term() * sign
        while True:
            ch = self._peek()
            if ch == "+":
                self.pos += 1
                value = value + self._term()
            elif ch == "-":
                self.pos += 1
                value = value - self._term()
            else:
                return value

    def _term(self) -> LaurentPoly:
        value = self._factor()
        while self._peek() == "*":
            self.pos += 1
            value = value * self._factor()
        return value

    def _factor(self) -> LaurentPoly:
        base = self._base()
        if self._peek() == "^":
            self.pos += 1
            exp = self._int()
            try:
                return base ** exp
            except NonDivisible:
                raise PolyParseError("negative power of a non-unit", self.pos)
        return base

    def _base(self) -> LaurentPoly:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            value = self._expr()
            if self._peek() != ")":
                raise PolyParseError("expected ')'", self.pos)
            self.pos += 1
            return value
        if ch.isdigit():
            return LaurentPoly.integer(self.vs, self._int())
        if ch == "q" or ch == "t":
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start:self.pos]
            try:
                return LaurentPoly.var(self.vs, name)
            except KeyError:
                raise PolyParseError(f"unknown variable {name!r}", start)
        raise PolyParseError("expected a factor", self.pos)

    def _int(self) -> int:
        self._skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise PolyParseError("expected an integer", start)
        return int(self.text[start:self.pos])


# -- scalar dispatch helpers -------------------------------------------------
#
# The algebra layers run over either symbolic coefficients (LaurentPoly) or
# rational ones (Fraction, numeric specialization).  These helpers are the
# few places where the two domains need different treatment.

def scalar_inverse(c):
    if isinstance(c, LaurentPoly):
        return c.inverse()
    if c == 0:
        raise DivisionByZero("division by zero scalar")
    return Fraction(1) / Fraction(c)


def scalar_div_exact(a, b):
    if isinstance(a, LaurentPoly):
        return a.div_exact(b)
    if isinstance(b, LaurentPoly):
        if isinstance(a, int):
            return LaurentPoly.integer(b.vs, a).div_exact(b)
        raise NonDivisible(f"rational {a} is not a polynomial multiple of {b}")
    if b == 0:
        raise DivisionByZero("division by zero scalar")
    return Fraction(a) / Fraction(b)


def scalar_is_zero(c) -> bool:
    if isinstance(c, LaurentPoly):
        return c.is_zero()
    return c == 0


def scalar_str(c) -> str:
    if isinstance(c, LaurentPoly):
        return str(c)
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

"""Theorem-level verification: Serre vanishing, bracket arrangements,
coproduct formulas, the A-series cross-check, the identity suite, and
desk-scale PBW independence certificates.

Every suite returns a :class:`VerificationReport`; a failing case always
carries a witness (the first differing term or tensor).  All checks are
exact: symbolic data compare Laurent polynomials, numeric data compare
rationals, and independence is certified through full rank of an exact
evaluation matrix (full rank modulo a large prime bounds the rational rank
from below, so the certificate direction is exact; deficiency at a point is
never taken as a falsification).
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .coeffring import (NonDivisible, scalar_div_exact, scalar_inverse,
                        scalar_str)
from .datum import QuantumDatum, make_datum, sigma, sigma_closed_form
from .freeword import (FreeElem, arrangement_factors, bracket_factors,
                       free_one, multidegree, recursion_bracketing,
                       skew_bracket)
from .pbwgen import generator_image, pbw_generators, tau_table
from .shuffle import (BraidedTensor, ShuffleElem, braided_coproduct,
                      eval_free, tensor_of, tensor_project_pair)


class NonProportionalProjection(ArithmeticError):
    """A projected coproduct component is not a scalar multiple of the
    expected generator tensor; the theorem under test is falsified."""


class DegenerateEvaluationPoint(ArithmeticError):
    """Rank deficiency at every retried evaluation point."""


# ---------------------------------------------------------------------------
# reports

@dataclass
class CaseResult:
    name: str
    passed: bool
    witness: str | None = None


@dataclass
class VerificationReport:
    suite: str
    cases: list
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def failures(self) -> list:
        return [c for c in self.cases if not c.passed]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "elapsed": round(self.elapsed, 3),
            "cases": [
                {"name": c.name, "passed": c.passed,
                 **({"witness": c.witness} if c.witness else {})}
                for c in self.cases
            ],
        }

    def summary(self) -> str:
        word = "pass" if self.passed else "FAIL"
        return (f"{self.suite}: {word} "
                f"({sum(c.passed for c in self.cases)}/{len(self.cases)} cases, "
                f"{self.elapsed:.2f}s)")


def _timed(suite: str, cases: list, t0: float) -> VerificationReport:
    return VerificationReport(suite, cases, time.monotonic() - t0)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("QBOREL_WORKERS", "1")))
    except ValueError:
        return 1


def _map_cases(fn, items) -> list:
    w = worker_count()
    if w > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=w) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _first_diff(a: dict, b: dict, render) -> str:
    for key in sorted(set(a) | set(b), key=repr):
        ca, cb = a.get(key), b.get(key)
        if ca != cb:
            return (f"at {render(key)}: "
                    f"{scalar_str(ca) if ca is not None else '(absent)'} != "
                    f"{scalar_str(cb) if cb is not None else '(absent)'}")
    return "no difference"


def _shuffle_witness(got: ShuffleElem, want: ShuffleElem) -> str:
    return _first_diff(got.terms, want.terms,
                       lambda z: "(" + " ".join(f"x{i}" for i in z) + ")")


def _tensor_witness(got: BraidedTensor, want: BraidedTensor) -> str:
    def render(key):
        l, r = key
        return ("(" + " ".join(f"x{i}" for i in l) + ")(x)(" +
                " ".join(f"x{i}" for i in r) + ")")

    return _first_diff(got.terms, want.terms, render)


# ---------------------------------------------------------------------------
# sigma / mu closed forms

def verify_sigma_closed_form(datum: QuantumDatum) -> VerificationReport:
    """sigma(k,m) = q^2 iff m = phi(k) else q, exempting series D at (n,n)."""
    t0 = time.monotonic()
    cases = []
    top = datum.max_letter
    for k in range(1, top + 1):
        for m in range(k, top + 1):
            got = sigma(datum, k, m)
            if datum.series == "D" and k == m == datum.n:
                ok = got == datum.q_power(1)
                cases.append(CaseResult(
                    f"sigma({k},{m}) [exempt: definitional value q]", ok,
                    None if ok else f"got {scalar_str(got)}"))
                continue
            want = sigma_closed_form(datum, k, m)
            ok = got == want
            cases.append(CaseResult(
                f"sigma({k},{m})", ok,
                None if ok else f"{scalar_str(got)} != {scalar_str(want)}"))
    return _timed("sigma-closed-form", cases, t0)


# ---------------------------------------------------------------------------
# Serre relations

def serre_relations(datum: QuantumDatum) -> list:
    """Defining relations as (name, FreeElem) pairs.

    For every ordered pair i != j with c = 1 - a_ji copies of x_j, both the
    left-nested chain [...[[x_i,x_j],x_j],...,x_j] and the right-nested
    chain [x_j,[x_j,...,[x_j,x_i]...]] are listed; for orthogonal pairs
    both collapse to the plain brackets [x_i,x_j] and [x_j,x_i].
    """
    n = datum.n
    rels = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            cnt = 1 - datum.cartan[j - 1][i - 1]
            xi = FreeElem.letter(datum, i)
            xj = FreeElem.letter(datum, j)
            left = xi
            lname = f"x{i}"
            for _ in range(cnt):
                left = skew_bracket(datum, left, xj)
                lname = f"[{lname},x{j}]"
            rels.append((lname, left))
            if cnt > 1:
                right = xi
                rname = f"x{i}"
                for _ in range(cnt):
                    right = skew_bracket(datum, xj, right)
                    rname = f"[x{j},{rname}]"
                rels.append((rname, right))
    return rels


def verify_serre(datum: QuantumDatum) -> VerificationReport:
    """Shuffle images of all defining relations vanish exactly."""
    t0 = time.monotonic()

    def check(item):
        name, elem = item
        img = eval_free(datum, elem)
        ok = img.is_zero()
        return CaseResult(name, ok, None if ok else f"image {img}")

    cases = _map_cases(check, serre_relations(datum))
    return _timed("serre", cases, t0)


# ---------------------------------------------------------------------------
# arrangement independence

def _arrangement_intervals(datum: QuantumDatum) -> list:
    n = datum.n
    out = []
    if datum.series == "C":
        for k in range(1, n + 1):
            for m in range(n, datum.phi(k)):
                if k <= n <= m:
                    out.append((k, m))
            for m in range(datum.phi(k) + 1, 2 * n):
                out.append((k, m))
    elif datum.series == "D":
        for k in range(1, n):
            for m in range(n + 1, datum.phi(k)):
                out.append((k, m))
            for m in range(datum.phi(k) + 1, 2 * n):
                out.append((k, m))
    return out


def verify_arrangements(datum: QuantumDatum) -> VerificationReport:
    """Every admissible split yields the same shuffle image, and the
    recurrence bracketings reproduce the canonical images."""
    t0 = time.monotonic()
    cases = []
    sym = "e" if datum.series == "D" else "v"
    for k, m in _arrangement_intervals(datum):
        reference = generator_image(datum, k, m)
        factors = arrangement_factors(datum, k, m)
        ok = True
        witness = None
        for s in range(1, len(factors)):
            img = eval_free(datum, bracket_factors(datum, factors, s))
            if img != reference:
                ok = False
                witness = f"split {s}: " + _shuffle_witness(img, reference)
                break
        cases.append(CaseResult(f"splits {sym}[{k},{m}]", ok, witness))
    # recurrence cross-checks on the fold-crossing intervals below phi(k)
    n = datum.n
    for k in range(1, n):
        for m in range(n + 1, datum.phi(k)):
            reference = generator_image(datum, k, m)
            img = eval_free(datum, recursion_bracketing(datum, k, m))
            ok = img == reference
            cases.append(CaseResult(
                f"recurrence {sym}[{k},{m}]", ok,
                None if ok else _shuffle_witness(img, reference)))
    return _timed("arrangements", cases, t0)


# ---------------------------------------------------------------------------
# coproduct formulas

@dataclass
class CoproductTerm:
    i: int
    tau: object
    grouplike: tuple
    left: str
    right: str
    unbraided_coefficient: object
    braided_coefficient: object


@dataclass
class CoproductFormula:
    """The middle part of the coproduct of one bracketed generator.

    ``terms`` lists, for each split index i, the tau coefficient, the
    group-like multidegree of the right word, the generator ids, the
    unbraided coefficient tau_i (1 - q^{-1}) and the braided coefficient
    gamma_i = tau_i (1 - q^{-1}) / p(w(i+1,m), w(k,i)).  ``braided`` is the
    reduced braided coproduct of the generator's shuffle image, which the
    terms reconstruct exactly.
    """

    series: str
    rank: int
    k: int
    m: int
    mode: str
    terms: list
    braided: BraidedTensor
    in_pbw_set: bool

    def tau_map(self) -> dict:
        return {t.i: t.tau for t in self.terms}

    def to_json_dict(self) -> dict:
        return {
            "series": self.series,
            "rank": self.rank,
            "k": self.k,
            "m": self.m,
            "mode": self.mode,
            "in_pbw_set": self.in_pbw_set,
            "terms": [
                {
                    "i": t.i,
                    "tau": scalar_str(t.tau),
                    "grouplike": list(t.grouplike),
                    "left": t.left,
                    "right": t.right,
                    "coefficient": scalar_str(t.unbraided_coefficient),
                }
                for t in self.terms
            ],
        }

    def text_lines(self) -> list:
        sym = "e" if self.series == "D" else "v"
        head = (f"Delta({sym}[{self.k},{self.m}]) = {sym}[k,m] (x) 1 "
                f"+ g_km (x) {sym}[k,m]")
        lines = [head]
        for t in self.terms:
            lines.append(
                f"  + tau_{t.i} (1-q^-1) g_k{t.i} {t.left} (x) {t.right}"
                f"   tau_{t.i} = {scalar_str(t.tau)}"
                f"   grouplike deg {list(t.grouplike)}")
        return lines


def _in_pbw_set(datum: QuantumDatum, k: int, m: int) -> bool:
    if datum.series == "A":
        return True
    if datum.series == "C":
        return m <= datum.phi(k)
    return m < datum.phi(k)


def coproduct_formula(datum: QuantumDatum, k: int, m: int,
                      mode: str = "assert") -> CoproductFormula:
    """Verify (assert) or recover (discover) the coproduct of v/e[k,m].

    assert: builds the closed-form right side from the tau table and checks
    exact equality of braided tensors.  discover: recovers each braided
    coefficient by projecting onto the (left, right) multidegree pair of the
    expected generator tensor and dividing exactly, then solves for tau, all
    without assuming the closed form.  Both modes require the projections to
    exhaust the actual coproduct.
    """
    datum._check_interval(k, m)
    img = generator_image(datum, k, m)
    actual = braided_coproduct(img, reduced=True)
    qfac = datum.one() - datum.q_power(-1)
    taus = tau_table(datum, k, m)
    sym = "e" if datum.series == "D" else "v"
    terms = []
    covered = BraidedTensor.zero()
    for i in range(k, m):
        lword = datum.series_word(i + 1, m)
        rword = datum.series_word(k, i)
        ldeg = datum.multidegree(lword)
        rdeg = datum.multidegree(rword)
        left_img = generator_image(datum, i + 1, m)
        right_img = generator_image(datum, k, i)
        expected = tensor_of(left_img, right_img)
        proj = tensor_project_pair(actual, ldeg, rdeg)
        p_lr = datum.p_words(lword, rword)
        if mode == "discover":
            if proj.is_zero():
                gamma = datum.zero()
                tau = datum.zero()
            else:
                if expected.is_zero():
                    raise NonProportionalProjection(
                        f"({k},{m}) i={i}: projection nonzero but the "
                        f"generator tensor vanishes: {proj}")
                pair, cexp = next(iter(expected.terms.items()))
                cact = proj.terms.get(pair)
                if cact is None:
                    raise NonProportionalProjection(
                        f"({k},{m}) i={i}: expected tensor pair missing "
                        f"from the projection")
                gamma = scalar_div_exact(cact, cexp)
                if proj != expected.scale(gamma):
                    raise NonProportionalProjection(
                        f"({k},{m}) i={i}: projection is not proportional "
                        f"to the generator tensor: "
                        + _tensor_witness(proj, expected.scale(gamma)))
                tau = scalar_div_exact(gamma * p_lr, qfac)
        else:
            tau = taus[i]
            gamma = tau * qfac * scalar_inverse(p_lr)
            want = expected.scale(gamma)
            if proj != want:
                raise NonProportionalProjection(
                    f"({k},{m}) i={i}: " + _tensor_witness(proj, want))
        covered = covered + (proj if mode == "discover" else expected.scale(gamma))
        terms.append(CoproductTerm(i, tau, rdeg, f"{sym}[{i + 1},{m}]",
                                   f"{sym}[{k},{i}]", tau * qfac, gamma))
    if covered != actual:
        raise NonProportionalProjection(
            f"({k},{m}): terms do not exhaust the braided coproduct: "
            + _tensor_witness(covered, actual))
    return CoproductFormula(datum.series, datum.n, k, m, mode, terms, actual,
                            _in_pbw_set(datum, k, m))


def verify_coproducts(datum: QuantumDatum) -> VerificationReport:
    """Assert and discover modes agree with the closed-form tau for every
    interval 1 <= k <= m < 2n (k <= m <= n for series A)."""
    t0 = time.monotonic()
    top = datum.max_letter
    sym = "e" if datum.series == "D" else "v"
    pairs = [(k, m) for k in range(1, top + 1) for m in range(k, top + 1)]

    def check(pair):
        k, m = pair
        tag = "" if _in_pbw_set(datum, k, m) else " (outside PBW set)"
        try:
            coproduct_formula(datum, k, m, mode="assert")
            found = coproduct_formula(datum, k, m, mode="discover")
        except (NonProportionalProjection, NonDivisible) as exc:
            return CaseResult(f"coproduct {sym}[{k},{m}]{tag}", False, str(exc))
        want = tau_table(datum, k, m)
        got = found.tau_map()
        if got != want:
            witness = _first_diff(got, want, lambda i: f"tau_{i}")
            return CaseResult(f"coproduct {sym}[{k},{m}]{tag}", False, witness)
        return CaseResult(f"coproduct {sym}[{k},{m}]{tag}", True)

    cases = _map_cases(check, pairs)
    return _timed("coproduct", cases, t0)


def verify_an_no_exceptions(datum: QuantumDatum) -> VerificationReport:
    """Series A: discover-mode coproducts return tau_i = 1 for all i."""
    if datum.series != "A":
        raise ValueError("verify_an_no_exceptions needs a series-A datum")
    t0 = time.monotonic()
    cases = []
    one = datum.one()
    for k in range(1, datum.n + 1):
        for m in range(k, datum.n + 1):
            try:
                found = coproduct_formula(datum, k, m, mode="discover")
            except (NonProportionalProjection, NonDivisible) as exc:
                cases.append(CaseResult(f"v[{k},{m}]", False, str(exc)))
                continue
            bad = {i: t for i, t in found.tau_map().items() if t != one}
            cases.append(CaseResult(
                f"v[{k},{m}]", not bad,
                None if not bad else f"non-unit taus {bad}"))
    return _timed("an-no-exceptions", cases, t0)


# ---------------------------------------------------------------------------
# identity suite

def _random_scalar(datum: QuantumDatum, rng: random.Random):
    c = rng.choice([-3, -2, -1, 1, 2, 3])
    return datum.integer(c) * datum.q_power(rng.randint(-1, 1))


def _random_homogeneous(datum: QuantumDatum, rng: random.Random,
                        max_len: int = 3) -> FreeElem:
    length = rng.randint(1, max_len)
    word = tuple(rng.randint(1, datum.max_letter) for _ in range(length))
    elem = FreeElem.word(word, _random_scalar(datum, rng))
    if length > 1 and rng.random() < 0.5:
        perm = list(word)
        rng.shuffle(perm)
        extra = elem + FreeElem.word(tuple(perm), _random_scalar(datum, rng))
        if extra:
            elem = extra
    return elem


def _guard_pairs(datum: QuantumDatum) -> list:
    """Pairs (u, w) whose skew bracket vanishes in the shuffle image."""
    n = datum.n
    pairs = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            cnt = 1 - datum.cartan[j - 1][i - 1]
            xi = FreeElem.letter(datum, i)
            xj = FreeElem.letter(datum, j)
            if cnt == 1:
                pairs.append((xi, xj))
                continue
            inner = xi
            for _ in range(cnt - 1):
                inner = skew_bracket(datum, xj, inner)
            pairs.append((xj, inner))
            outer = xi
            for _ in range(cnt - 1):
                outer = skew_bracket(datum, outer, xj)
            pairs.append((outer, xj))
    return pairs


def _p_of(datum, u, v):
    return datum.p_deg(multidegree(datum, u), multidegree(datum, v))


def verify_identity_suite(datum: QuantumDatum, seed: int = 0,
                          count: int = 100) -> VerificationReport:
    """Randomized exact checks of the bracket identities.

    The unconditional identities (Jacobi, antisymmetry, both ad-identities)
    are verified as free-algebra equalities.  The two conditional
    identities need a vanishing bracket as hypothesis; nonzero free-algebra
    witnesses of [u,w] = 0 do not exist over the generic datum, so the
    guard is realized in the shuffle image (where the defining relations
    vanish) and the identities are checked there, matching how they are
    applied inside the quantum Borel algebra.
    """
    t0 = time.monotonic()
    rng = random.Random(seed)
    guards = _guard_pairs(datum)
    cases = []

    def run(name, fn):
        for instance in range(count):
            witness = fn(rng)
            if witness is not None:
                cases.append(CaseResult(f"{name} x{count}", False,
                                        f"instance {instance}: {witness}"))
                return
        cases.append(CaseResult(f"{name} x{count}", True))

    def jak1(rng):
        u = _random_homogeneous(datum, rng)
        v = _random_homogeneous(datum, rng)
        w = _random_homogeneous(datum, rng)
        p_wv_inv = scalar_inverse(_p_of(datum, w, v))
        p_vw = _p_of(datum, v, w)
        lhs = skew_bracket(datum, skew_bracket(datum, u, v), w)
        rhs = (skew_bracket(datum, u, skew_bracket(datum, v, w))
               + skew_bracket(datum, skew_bracket(datum, u, w), v).scale(p_wv_inv)
               + (skew_bracket(datum, u, w) * v).scale(p_vw - p_wv_inv))
        if lhs != rhs:
            return f"u={u!r} v={v!r} w={w!r}"
        return None

    def cha(rng):
        u = _random_homogeneous(datum, rng)
        v = _random_homogeneous(datum, rng)
        p_uv = _p_of(datum, u, v)
        p_vu = _p_of(datum, v, u)
        lhs = skew_bracket(datum, u, v)
        rhs = (-skew_bracket(datum, v, u).scale(p_uv)
               + (u * v).scale(datum.one() - p_uv * p_vu))
        if lhs != rhs:
            return f"u={u!r} v={v!r}"
        return None

    def jak3(rng):
        u, w = rng.choice(guards)
        u = u.scale(_random_scalar(datum, rng))
        w = w.scale(_random_scalar(datum, rng))
        v = _random_homogeneous(datum, rng)
        if eval_free(datum, skew_bracket(datum, u, w)):
            return "guard [u,w] does not vanish"
        lhs = eval_free(datum, skew_bracket(datum, skew_bracket(datum, u, v), w))
        rhs = eval_free(datum, skew_bracket(datum, u, skew_bracket(datum, v, w)))
        if lhs != rhs:
            return f"u={u!r} v={v!r} w={w!r}: " + _shuffle_witness(lhs, rhs)
        return None

    def jja(rng):
        u, v = rng.choice(guards)
        u = u.scale(_random_scalar(datum, rng))
        v = v.scale(_random_scalar(datum, rng))
        w = _random_homogeneous(datum, rng)
        if eval_free(datum, skew_bracket(datum, u, v)):
            return "guard [u,v] does not vanish"
        p_vw = _p_of(datum, v, w)
        p_wv = _p_of(datum, w, v)
        p_uv = _p_of(datum, u, v)
        lhs = eval_free(datum, skew_bracket(datum, u, skew_bracket(datum, v, w)))
        rhs = eval_free(
            datum,
            -skew_bracket(datum, skew_bracket(datum, u, w), v).scale(p_vw)
            + (v * skew_bracket(datum, u, w)).scale(
                p_uv * (datum.one() - p_vw * p_wv)))
        if lhs != rhs:
            return f"u={u!r} v={v!r} w={w!r}: " + _shuffle_witness(lhs, rhs)
        return None

    def br1f(rng):
        u = _random_homogeneous(datum, rng, 2)
        v = _random_homogeneous(datum, rng, 2)
        w = _random_homogeneous(datum, rng, 2)
        p_vw = _p_of(datum, v, w)
        lhs = skew_bracket(datum, u * v, w)
        rhs = (skew_bracket(datum, u, w) * v).scale(p_vw) + u * skew_bracket(datum, v, w)
        if lhs != rhs:
            return f"u={u!r} v={v!r} w={w!r}"
        return None

    def br1(rng):
        u = _random_homogeneous(datum, rng, 2)
        v = _random_homogeneous(datum, rng, 2)
        w = _random_homogeneous(datum, rng, 2)
        p_uv = _p_of(datum, u, v)
        lhs = skew_bracket(datum, u, v * w)
        rhs = skew_bracket(datum, u, v) * w + (v * skew_bracket(datum, u, w)).scale(p_uv)
        if lhs != rhs:
            return f"u={u!r} v={v!r} w={w!r}"
        return None

    run("jacobi", jak1)
    run("antisymmetry", cha)
    run("conditional-jacobi", jak3)
    run("conditional-swap", jja)
    run("ad-left", br1f)
    run("ad-right", br1)
    return _timed("identities", cases, t0)


# ---------------------------------------------------------------------------
# PBW independence certificate

_RANK_PRIMES = (2147483647, 2147483629, 2147483587)


def _enumerate_exponents(degrees: list, budget: int):
    """All exponent tuples e with sum e_i * degrees_i <= budget, lex order."""
    out = []

    def rec(pos, left, prefix):
        if pos == len(degrees):
            out.append(tuple(prefix))
            return
        for e in range(left // degrees[pos] + 1):
            prefix.append(e)
            rec(pos + 1, left - e * degrees[pos], prefix)
            prefix.pop()

    rec(0, budget, [])
    return out


def _modp_first_dependent(rows: list, p: int):
    """Incremental row reduction mod p; returns (rank, first dependent row)."""
    import numpy as np

    if not rows:
        return 0, None
    cols = len(rows[0])
    pivots = []  # (column, normalized numpy row)
    rank = 0
    for idx, row in enumerate(rows):
        r = np.array(row, dtype=np.int64) % p
        for col, pv in pivots:
            f = int(r[col])
            if f:
                r = (r - f * pv) % p
        nz = np.nonzero(r)[0]
        if nz.size == 0:
            return rank, idx
        col = int(nz[0])
        inv = pow(int(r[col]), p - 2, p)
        pivots.append((col, (r * inv) % p))
        rank += 1
    return rank, None


def pbw_product_rows(datum: QuantumDatum, max_degree: int):
    """Shuffle images of all ordered PBW power products of bounded degree.

    Returns (combos, generator labels, rows) where each row maps
    comonomials to rational coefficients.
    """
    gens = pbw_generators(datum)
    combos = _enumerate_exponents([g.degree for g in gens], max_degree)
    rows = []
    for combo in combos:
        elem = free_one(datum)
        for g, e in zip(gens, combo):
            if e:
                elem = elem * g.element ** e
        rows.append(eval_free(datum, elem).terms)
    labels = [g.label for g in gens]
    return combos, labels, rows


def verify_pbw_independence(datum: QuantumDatum, max_degree: int,
                            seed: int = 0) -> VerificationReport:
    """Certify linear independence of ordered PBW products of bounded degree.

    Evaluates every ordered product at a rational point, assembles the exact
    coefficient matrix over the comonomial basis, and certifies full row
    rank: full rank modulo a large prime is a lower bound for the rational
    rank, so the certificate is exact.  A deficient point is retried at a
    second seed (and a different prime) before the suite reports failure,
    since deficiency at a point never falsifies generic independence.
    """
    t0 = time.monotonic()
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    attempts = []
    for attempt in range(2):
        at_seed = seed + attempt
        if datum.mode == "numeric" and attempt == 0:
            point = datum
        else:
            point = make_datum(datum.series, datum.n, "numeric", seed=at_seed)
        combos, labels, rows = pbw_product_rows(point, max_degree)
        columns = sorted({z for row in rows for z in row},
                         key=lambda z: (len(z), z))
        col_index = {z: idx for idx, z in enumerate(columns)}
        p = _RANK_PRIMES[attempt % len(_RANK_PRIMES)]
        int_rows = []
        for row in rows:
            vec = [0] * len(columns)
            for z, c in row.items():
                c = Fraction(c)
                vec[col_index[z]] = (c.numerator * pow(c.denominator, p - 2, p)) % p
            int_rows.append(vec)
        rank, dep = _modp_first_dependent(int_rows, p)
        name = (f"rank at seed {at_seed}: {rank}/{len(rows)} products, "
                f"{len(columns)} comonomials, degree <= {max_degree}")
        if dep is None:
            attempts.append(CaseResult(name, True))
            return _timed("pbw-independence", attempts, t0)
        combo_desc = " * ".join(
            f"{lbl}^{e}" for lbl, e in zip(labels, combos[dep]) if e) or "1"
        attempts.append(CaseResult(
            name, False,
            f"DegenerateEvaluationPoint: product {combo_desc} dependent"))
    return _timed("pbw-independence", attempts, t0)


# ---------------------------------------------------------------------------
# suite dispatch

SUITES = ("serre", "identities", "arrangements", "coproduct", "pbw", "sigma", "all")


def run_suites(datum: QuantumDatum, suite: str, seed: int = 0,
               max_degree: int = 4, count: int = 100) -> list:
    """Run one named suite (or all of them); returns a list of reports."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    reports = []
    if suite in ("sigma", "all"):
        reports.append(verify_sigma_closed_form(datum))
    if suite in ("serre", "all"):
        reports.append(verify_serre(datum))
    if suite in ("identities", "all"):
        reports.append(verify_identity_suite(datum, seed=seed, count=count))
    if suite in ("arrangements", "all") and datum.series != "A":
        reports.append(verify_arrangements(datum))
    if suite in ("coproduct", "all"):
        if datum.series == "A":
            reports.append(verify_an_no_exceptions(datum))
        else:
            reports.append(verify_coproducts(datum))
    if suite in ("pbw", "all"):
        reports.append(verify_pbw_independence(datum, max_degree, seed=seed))
    return reports

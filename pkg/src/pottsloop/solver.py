"""Graded fixed-point solver for the edge-removal generating equation.

The generating function Phi assigns to every boundary word w and triangle
order n an exact coefficient p_w^(n).  Removing the marked boundary edge
either deletes a triangle (word one letter longer, one g lower) or splits
the disk in two (contiguous subwords), so the coefficient at combined grade
|w| + 2n only consults strictly lower grades and the whole table is solved
by induction.  A coefficient is zero unless |w| + n is even (every triangle
contributes three edge ends).

Solved coefficients are polynomials in c with nonnegative integer
coefficients: each one counts spin-decorated triangulations where every
unequal-spin adjacency carries one factor of c.  In symbolic mode they are
stored packed into single big integers, base 2**64 per c-power.  The counts
at our truncations are bounded by Catalan(15) * 3**8 < 2**36, far below the
2**63 headroom, so packed addition and multiplication never carry between
digits and decoding is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .freealg import LETTERS, NCSeries, Word
from .ring import (
    GSeries,
    Poly,
    RationalFunctionC,
    RF_ZERO,
    XLaurent,
    xlaurent_sqrt,
)

_B = 64
_DIGIT = (1 << _B) - 1
_GUARD = 1 << 62


class TruncationError(Exception):
    """A coefficient outside the solved region was requested."""


def pack_poly(p: Poly) -> int:
    if p.den != 1:
        raise ValueError("only integer polynomials pack")
    v = 0
    for e, a in enumerate(p.coeffs):
        if a < 0 or a >= _GUARD:
            raise ValueError("coefficient outside packable range")
        v |= a << (_B * e)
    return v


def unpack_poly(v: int) -> Poly:
    digits = []
    while v:
        d = v & _DIGIT
        if d >= _GUARD:
            raise ArithmeticError("packed digit exceeds guard; headroom violated")
        digits.append(d)
        v >>= _B
    return Poly(digits)


@dataclass(frozen=True)
class ModelSpec:
    """What to solve: model kind, coupling mode and truncations."""

    kind: str = "potts3"  # "potts3" | "pure-gravity"
    c: Union[str, Fraction, int] = "symbolic"
    ng: int = 4
    ltarget: int = 4

    def __post_init__(self):
        if self.kind not in ("potts3", "pure-gravity"):
            raise ValueError(f"unknown model kind {self.kind!r}")
        if self.ng < 0 or self.ltarget < 0:
            raise ValueError("truncation orders must be nonnegative")
        if self.kind == "potts3" and not self.symbolic:
            c0 = Fraction(self.c)
            # propagator normalisation 1 + c - 2c^2 = (1-c)(1+2c) must not vanish
            if (1 + c0 - 2 * c0 * c0) == 0:
                raise ValueError(f"coupling c = {c0} is a pole of the propagator")

    @property
    def symbolic(self) -> bool:
        return isinstance(self.c, str) and self.c == "symbolic"

    @property
    def nletters(self) -> int:
        return 3 if self.kind == "potts3" else 1


def _words_by_length(nlet: int, maxlen: int) -> list:
    """Packed words (two bits per letter, first letter lowest) per length."""
    out = [[0]]
    for k in range(1, maxlen + 1):
        prev = out[-1]
        shift = 2 * (k - 1)
        cur = []
        for a in range(nlet):
            abits = a << shift
            cur.extend(w | abits for w in prev)
        out.append(cur)
    return out


def _solve_dense(nlet: int, S: int, ng: int, symbolic: bool, c0):
    """Solve every coefficient with |w| + n <= S, n <= ng, |w| + n even.

    Returns layers[(n, k)] = dict(packed word -> value); values are packed
    integer polynomials in c (symbolic) or Fractions (numeric).
    """
    layers = {}
    words = _words_by_length(nlet, S)
    zero = 0 if symbolic else Fraction(0)
    one = 1 if symbolic else Fraction(1)

    for n in range(ng + 1):
        for k in range(S - n + 1):
            if (k + n) & 1:
                continue
            d = {}
            layers[(n, k)] = d
            if k == 0:
                if n == 0:
                    d[0] = one
                continue
            # split data: position t strips letter j = w[t]; u = w[1:t], v = w[t+1:]
            splits = []
            for t in range(1, k):
                ulen, vlen = t - 1, k - 1 - t
                pairs = []
                for m in range(n + 1):
                    if (ulen + m) & 1:
                        continue
                    du = layers.get((m, ulen))
                    dv = layers.get((n - m, vlen))
                    if du and dv:
                        pairs.append((du.get, dv.get))
                if pairs:
                    splits.append((2 * t, (1 << (2 * (t - 1))) - 1, 2 * (t + 1), pairs))
            dprev = layers.get((n - 1, k + 1)) if n else None
            dprev_get = dprev.get if dprev else None

            if symbolic:
                for w in words[k]:
                    i0 = w & 3
                    acc = 0
                    for shift_j, mask_u, shift_v, pairs in splits:
                        u = (w >> 2) & mask_u
                        v = w >> shift_v
                        conv = 0
                        for uget, vget in pairs:
                            pu = uget(u)
                            if pu is not None:
                                pv = vget(v)
                                if pv is not None:
                                    conv += pu * pv
                        if conv:
                            if ((w >> shift_j) & 3) == i0:
                                acc += conv
                            else:
                                acc += conv << _B
                    if dprev_get is not None:
                        u4 = (w >> 2) << 4
                        for i in range(nlet):
                            val = dprev_get(u4 | i | (i << 2))
                            if val is not None:
                                if i == i0:
                                    acc += val
                                else:
                                    acc += val << _B
                    if acc:
                        d[w] = acc
            else:
                for w in words[k]:
                    i0 = w & 3
                    acc = zero
                    for shift_j, mask_u, shift_v, pairs in splits:
                        u = (w >> 2) & mask_u
                        v = w >> shift_v
                        conv = zero
                        for uget, vget in pairs:
                            pu = uget(u)
                            if pu is not None:
                                pv = vget(v)
                                if pv is not None:
                                    conv += pu * pv
                        if conv:
                            # unequal letters carry the propagator weight c
                            if ((w >> shift_j) & 3) == i0:
                                acc += conv
                            else:
                                acc += conv * c0
                    if dprev_get is not None:
                        u4 = (w >> 2) << 4
                        for i in range(nlet):
                            val = dprev_get(u4 | i | (i << 2))
                            if val is not None:
                                if i == i0:
                                    acc += val
                                else:
                                    acc += val * c0
                    if acc:
                        d[w] = acc
    return layers


class _TableBase:
    """Shared coefficient accessors over ``value_packed``."""

    symbolic: bool
    ng: int

    def value_packed(self, bits: int, k: int, n: int):
        raise NotImplementedError

    def value_word(self, word: Word, n: int):
        return self.value_packed(word.bits, word.n, n)

    def p_poly(self, word, n: int):
        """Coefficient of g**n for the word, as Poly (symbolic) or Fraction."""
        word = _as_word(word)
        v = self.value_packed(word.bits, word.n, n)
        return unpack_poly(v) if self.symbolic else v

    def p_rf(self, word, n: int) -> RationalFunctionC:
        word = _as_word(word)
        return self.p_rf_packed(word.bits, word.n, n)

    def p_rf_packed(self, bits: int, k: int, n: int) -> RationalFunctionC:
        v = self.value_packed(bits, k, n)
        if self.symbolic:
            return RationalFunctionC.from_poly(unpack_poly(v))
        return RationalFunctionC.constant(v)

    def gseries(self, word, ng: Optional[int] = None) -> GSeries:
        """The full g-series of a word's coefficient."""
        word = _as_word(word)
        ng = self.ng if ng is None else ng
        return GSeries([self.p_rf(word, n) for n in range(ng + 1)], ng)


def _as_word(w) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.from_string(w)
    return Word(w)


class SolutionTable(_TableBase):
    """Dense solved table, complete on {|w| + n <= S, n <= ng}."""

    def __init__(self, spec: ModelSpec, S: int, layers: dict):
        self.spec = spec
        self.S = S
        self.ng = spec.ng
        self.symbolic = spec.symbolic
        self.c0 = None if spec.symbolic else Fraction(spec.c)
        self.layers = layers
        self._zero = 0 if self.symbolic else Fraction(0)
        self._phi = None

    @property
    def grade_reached(self) -> int:
        return min(self.S, 2 * self.ng)

    def value_packed(self, bits: int, k: int, n: int):
        if (k + n) & 1:
            return self._zero
        if n < 0:
            return self._zero
        if n > self.ng or k + n > self.S:
            raise TruncationError(
                f"coefficient (|w|={k}, n={n}) outside solved region "
                f"|w|+n <= {self.S}, n <= {self.ng}"
            )
        d = self.layers.get((n, k))
        if not d:
            return self._zero
        return d.get(bits, self._zero)

    def slots(self):
        """All (n, k) layers with their word dicts."""
        return self.layers.items()

    @property
    def phi(self) -> NCSeries:
        """NCSeries view up to the reported word length."""
        if self._phi is None:
            self._phi = self.to_ncseries(self.spec.ltarget, self.ng)
        return self._phi

    def to_ncseries(self, lmax: int, ng: int) -> NCSeries:
        terms = {}
        for (n, k), d in self.layers.items():
            if k > lmax or n > ng:
                continue
            for bits, v in d.items():
                w = Word._raw(k, bits)
                g = terms.get(w)
                if g is None:
                    g = [RF_ZERO] * (ng + 1)
                    terms[w] = g
                g[n] = (
                    RationalFunctionC.from_poly(unpack_poly(v))
                    if self.symbolic
                    else RationalFunctionC.constant(v)
                )
        return NCSeries(
            {w: GSeries(tuple(g), ng) for w, g in terms.items()}, lmax, ng
        )

    def to_json(self) -> dict:
        """{word: {g-power: coefficient string}} for reported words."""
        out = {}
        for (n, k), d in sorted(self.layers.items()):
            if k > self.spec.ltarget:
                continue
            for bits, v in d.items():
                w = str(Word._raw(k, bits))
                val = unpack_poly(v) if self.symbolic else v
                s = str(val) if self.symbolic else (
                    f"{val.numerator}/{val.denominator}"
                    if val.denominator != 1
                    else str(val.numerator)
                )
                out.setdefault(w, {})[str(n)] = s
        return {w: dict(sorted(g.items(), key=lambda kv: int(kv[0]))) for w, g in sorted(out.items(), key=lambda kv: (len(kv[0]), kv[0]))}


def solve_series(spec: ModelSpec) -> SolutionTable:
    """Solve the generating equation to the spec's truncations.

    Internally solves the region |w| + n <= ltarget + ng, which is exactly
    what the grade induction consumes: each triangle removal trades one
    g-order for one extra letter, so reported words of length ltarget at
    order ng pull on words up to ltarget + ng at order zero and never
    longer.
    """
    S = spec.ltarget + spec.ng
    c0 = None if spec.symbolic else Fraction(spec.c)
    layers = _solve_dense(spec.nletters, S, spec.ng, spec.symbolic, c0)
    return SolutionTable(spec, S, layers)


class LazyTable(_TableBase):
    """Demand-driven solved table (memoised recursion on the same grading).

    Used for deep amplitude extraction where dense enumeration of all words
    would be prohibitive.  Values agree with the dense solver wherever both
    are defined (tested), since both implement the same well-founded
    recursion.
    """

    def __init__(self, spec: ModelSpec, max_len: int):
        self.spec = spec
        self.ng = spec.ng
        self.symbolic = spec.symbolic
        self.c0 = None if spec.symbolic else Fraction(spec.c)
        self.max_len = max_len
        self.nlet = spec.nletters
        self._zero = 0 if self.symbolic else Fraction(0)
        self._one = 1 if self.symbolic else Fraction(1)
        self._memo = {}

    def value_packed(self, bits: int, k: int, n: int):
        if (k + n) & 1:
            return self._zero
        if n < 0:
            return self._zero
        if n > self.ng or k > self.max_len:
            raise TruncationError(
                f"coefficient (|w|={k}, n={n}) beyond lazy-table guards "
                f"(max_len={self.max_len}, ng={self.ng})"
            )
        key = ((bits << 7) | k) << 4 | n
        memo = self._memo
        v = memo.get(key)
        if v is None:
            v = self._compute(bits, k, n)
            memo[key] = v
        return v

    def _compute(self, w: int, k: int, n: int):
        if k == 0:
            return self._one if n == 0 else self._zero
        symbolic = self.symbolic
        c0 = self.c0
        value = self.value_packed
        i0 = w & 3
        acc = self._zero
        for t in range(1, k):
            ulen = t - 1
            vlen = k - 1 - t
            u = (w >> 2) & ((1 << (2 * ulen)) - 1)
            v = w >> (2 * (t + 1))
            conv = self._zero
            for m in range(n + 1):
                if (ulen + m) & 1:
                    continue
                pu = value(u, ulen, m)
                if pu:
                    pv = value(v, vlen, n - m)
                    if pv:
                        conv += pu * pv
            if conv:
                if ((w >> (2 * t)) & 3) == i0:
                    acc += conv
                else:
                    acc += (conv << _B) if symbolic else conv * c0
        if n:
            u4 = (w >> 2) << 4
            for i in range(self.nlet):
                val = value(u4 | i | (i << 2), k + 1, n - 1)
                if val:
                    if i == i0:
                        acc += val
                    else:
                        acc += (val << _B) if symbolic else val * c0
        return acc


# ---------------------------------------------------------------------------
# generating equation as an operator on NCSeries (reference-scale path)
# ---------------------------------------------------------------------------


def build_rhs_potts(phi: NCSeries, c="symbolic") -> NCSeries:
    """One application of the generating-equation right-hand side.

    rhs = 1 + sum_i x_i Phi (sum_j G_ij x_j) Phi
            + g sum_i (sum_j G_ij x_j) Delta_i^2 Phi
    with G_ii = 1 and G_ij = c for unequal spins, transcribed term by term.
    """
    ng, lmax = phi.ng, phi.lmax
    from .ring import RF_C

    cval = RF_C if (isinstance(c, str) and c == "symbolic") else RationalFunctionC.constant(Fraction(c))
    cg = GSeries.constant(cval, ng)
    gmono = GSeries.g_power(1, ng)
    rhs = NCSeries.unit(lmax, ng)
    for i in LETTERS:
        right = NCSeries.zero(lmax, ng)
        for j in LETTERS:
            piece = phi.mul_letter_left(j)
            if i != j:
                piece = piece.scale(cg)
            right = right + piece
        rhs = rhs + (phi * right).mul_letter_left(i)
        dd = phi.left_delta(i).left_delta(i)
        for j in LETTERS:
            piece = dd.mul_letter_left(j).scale(gmono)
            if i != j:
                piece = piece.scale(cg)
            rhs = rhs + piece
    return rhs


# ---------------------------------------------------------------------------
# residuals of the solved table
# ---------------------------------------------------------------------------


def _rhs_packed(table: SolutionTable, w: int, k: int, n: int):
    """Right-hand-side value at one slot, re-read from the finished table."""
    symbolic = table.symbolic
    value = table.value_packed
    c0 = table.c0
    nlet = table.spec.nletters
    if k == 0:
        one = 1 if symbolic else Fraction(1)
        zero = 0 if symbolic else Fraction(0)
        return one if n == 0 else zero
    i0 = w & 3
    acc = 0 if symbolic else Fraction(0)
    for t in range(1, k):
        ulen, vlen = t - 1, k - 1 - t
        u = (w >> 2) & ((1 << (2 * ulen)) - 1)
        v = w >> (2 * (t + 1))
        conv = 0 if symbolic else Fraction(0)
        for m in range(n + 1):
            if (ulen + m) & 1:
                continue
            pu = value(u, ulen, m)
            if pu:
                pv = value(v, vlen, n - m)
                if pv:
                    conv += pu * pv
        if conv:
            if ((w >> (2 * t)) & 3) == i0:
                acc += conv
            else:
                acc += (conv << _B) if symbolic else conv * c0
    if n:
        u4 = (w >> 2) << 4
        for i in range(nlet):
            val = value(u4 | i | (i << 2), k + 1, n - 1)
            if val:
                if i == i0:
                    acc += val
                else:
                    acc += (val << _B) if symbolic else val * c0
    return acc


def _prefix_split_sum(table, w: int, k: int, n: int, letter: int):
    """Coefficient of w in Phi x_letter Phi (splits at every matching letter)."""
    symbolic = table.symbolic
    value = table.value_packed
    acc = 0 if symbolic else Fraction(0)
    for t in range(k):
        if ((w >> (2 * t)) & 3) != letter:
            continue
        ulen, vlen = t, k - 1 - t
        u = w & ((1 << (2 * t)) - 1)
        v = w >> (2 * (t + 1))
        for m in range(n + 1):
            if (ulen + m) & 1:
                continue
            pu = value(u, ulen, m)
            if pu:
                pv = value(v, vlen, n - m)
                if pv:
                    acc += pu * pv
    return acc


@dataclass
class ResidualReport:
    """Nonzero residual slots of the two generating-equation forms."""

    fixed_point: list
    recast: list
    grade: int

    @property
    def ok(self) -> bool:
        return not self.fixed_point and not self.recast

    def as_ncseries(self, table, which: str = "fixed_point") -> NCSeries:
        """Sparse NCSeries of the nonzero residual coefficients (empty = 0)."""
        entries = self.fixed_point if which == "fixed_point" else self.recast
        ng = table.ng
        terms = {}
        for word, n, value in entries:
            g = terms.setdefault(word, [RF_ZERO] * (ng + 1))
            g[n] = (
                RationalFunctionC.from_poly(value)
                if isinstance(value, Poly)
                else RationalFunctionC.constant(value)
            )
        return NCSeries({w: GSeries(tuple(g), ng) for w, g in terms.items()}, self.grade, ng)


def _signed_unpack(v: int) -> Poly:
    """Decode a signed packed combination (digits may borrow; resolve them)."""
    digits = []
    while v:
        d = v & _DIGIT
        if d >= (1 << (_B - 1)):
            d -= 1 << _B
        digits.append(d)
        v = (v - d) >> _B
    return Poly(digits)


def generating_residual(table: SolutionTable, grade: Optional[int] = None) -> ResidualReport:
    """Residuals of the solved table, checked slot by slot.

    Two forms are evaluated: the fixed-point form Phi - rhs(Phi), over slots
    of even |w| + n, and the derivative (recast) form
    (1+c) D0 Phi + (2c^2 - c - 1)(Phi x0 Phi + g D0^2 Phi) - c (D1 Phi + D2 Phi),
    whose content lives at odd |w| + n.  Both must vanish identically.
    """
    if grade is None:
        grade = table.grade_reached
    symbolic = table.symbolic
    c0 = table.c0
    bad_fp = []
    bad_rc = []
    words = _words_by_length(table.spec.nletters, min(grade, table.S))
    for k in range(min(grade, table.S) + 1):
        nmax = (grade - k) // 2
        for n in range(min(nmax, table.ng) + 1):
            if (k + n) & 1 == 0:
                # fixed-point form
                for w in words[k]:
                    lhs = table.value_packed(w, k, n)
                    rhs = _rhs_packed(table, w, k, n)
                    if lhs != rhs:
                        word = Word._raw(k, w)
                        diff = (
                            unpack_poly(lhs) - unpack_poly(rhs)
                            if symbolic
                            else lhs - rhs
                        )
                        bad_fp.append((word, n, diff))
            else:
                if table.spec.nletters != 3:
                    continue
                # recast form, evaluated as one signed combination;
                # prepending letter a to packed w is a | (w << 2)
                for w in words[k]:
                    d0 = table.value_packed(w << 2, k + 1, n)
                    d1 = table.value_packed(1 | (w << 2), k + 1, n)
                    d2 = table.value_packed(2 | (w << 2), k + 1, n)
                    quad = _prefix_split_sum(table, w, k, n, 0)
                    dd0 = table.value_packed(w << 4, k + 2, n - 1) if n else (0 if symbolic else Fraction(0))
                    if symbolic:
                        qg = quad + dd0
                        # (1+c) d0 - (1 + c - 2c^2) qg - c (d1 + d2) == 0
                        resid = d0 + (d0 << _B) - qg - (qg << _B) + ((qg << (2 * _B)) << 1) - ((d1 + d2) << _B)
                        if resid:
                            bad_rc.append((Word._raw(k, w), n, _signed_unpack(resid)))
                    else:
                        D = 1 + c0 - 2 * c0 * c0
                        resid = (1 + c0) * d0 - D * (quad + dd0) - c0 * (d1 + d2)
                        if resid:
                            bad_rc.append((Word._raw(k, w), n, resid))
    return ResidualReport(bad_fp, bad_rc, grade)


def recast_residual_rect(table: _TableBase, kmax: int, ng: int) -> list:
    """Derivative-form residual over all words up to kmax, orders up to ng.

    Works through the generic coefficient interface, so a demand-driven
    table serves it without a dense solve.  Returns the nonzero slots.
    """
    symbolic = table.symbolic
    c0 = table.c0
    value = table.value_packed
    bad = []
    words = _words_by_length(3, kmax)
    for k in range(kmax + 1):
        for n in range(ng + 1):
            if (k + n) & 1 == 0:
                continue
            for w in words[k]:
                d0 = value(w << 2, k + 1, n)
                d1 = value(1 | (w << 2), k + 1, n)
                d2 = value(2 | (w << 2), k + 1, n)
                quad = _prefix_split_sum(table, w, k, n, 0)
                dd0 = value(w << 4, k + 2, n - 1) if n else (0 if symbolic else Fraction(0))
                if symbolic:
                    qg = quad + dd0
                    resid = d0 + (d0 << _B) - qg - (qg << _B) + ((qg << (2 * _B)) << 1) - ((d1 + d2) << _B)
                    if resid:
                        bad.append((Word._raw(k, w), n, _signed_unpack(resid)))
                else:
                    D = 1 + c0 - 2 * c0 * c0
                    resid = (1 + c0) * d0 - D * (quad + dd0) - c0 * (d1 + d2)
                    if resid:
                        bad.append((Word._raw(k, w), n, resid))
    return bad


# ---------------------------------------------------------------------------
# pure gravity: series solve plus closed-form branch comparison
# ---------------------------------------------------------------------------


@dataclass
class PureGravityResult:
    table: SolutionTable
    phi: XLaurent  # series solution as power series in x
    branch: XLaurent  # quadratic branch of the validated equation form
    branch_other: XLaurent  # the rejected branch (singular as x -> 0)
    variant_coeffs: dict  # fixed point of the extra-1/x variant of the triangle term
    variant_first_mismatch: Optional[tuple]


def pure_gravity_phi(table: SolutionTable, nx: int, ng: int) -> XLaurent:
    coeffs = []
    for k in range(nx + 1):
        coeffs.append(table.gseries(Word([0] * k), ng))
    return XLaurent(0, coeffs, nx, ng)


def _pure_gravity_branches(p1: GSeries, nx: int, ng: int):
    """Both roots of the quadratic generating equation for the one-matrix model.

    The quadratic is x^2 Phi^2 - (1 - g/x) Phi + (1 - g/x - g p1) = 0; the
    root regular at x = 0 is the disk generating function.  Internal
    truncation is widened so that every kept slot is exact despite the
    negative x powers (each carries at least one g).
    """
    NX = nx + ng + 2
    one = XLaurent.x_power(0, NX, ng)
    g = XLaurent.constant(GSeries.g_power(1, ng), NX, ng)
    x = XLaurent.x_power(1, NX, ng)
    g_over = g * XLaurent.x_power(-1, NX, ng)
    p1g = XLaurent.constant(p1, NX, ng) * g
    b = one - g_over
    const = one - g_over - p1g
    disc = b * b - 4 * (x * x) * const
    s = xlaurent_sqrt(disc, grade_cap=NX)

    def _div(num):
        shifted = XLaurent(num.low - 2, num.coeffs, NX - 2, ng)
        half = shifted * XLaurent.constant(Fraction(1, 2), NX - 2, ng)
        return half.retruncate(nx, ng)

    return _div(b - s), _div(b + s)


def solve_pure_gravity_variant(ng: int, lx: int) -> dict:
    """Fixed point of the variant equation whose triangle term is
    g (Phi - 1 - p1 x) / x^2 instead of g (Phi - 1 - p1 x) / x.

    Returns {(k, n): Fraction}.  The variant couples (k, n) to (k + 2, n - 1),
    so it is solved by induction on n.  Its low moments disagree with the
    Wick oracle, which is what rules this reading out.
    """
    kmax = lx + 2 * ng
    p: dict = {}
    for n in range(ng + 1):
        for k in range(kmax - 2 * n + 1):
            acc = Fraction(1) if (k == 0 and n == 0) else Fraction(0)
            if n:
                acc += p.get((k + 2, n - 1), Fraction(0))
            for a in range(k - 1):
                for m in range(n + 1):
                    pa = p.get((a, m))
                    if pa:
                        pb = p.get((k - 2 - a, n - m))
                        if pb:
                            acc += pa * pb
            if acc:
                p[(k, n)] = acc
    return p


def solve_pure_gravity(ng: int, lx: int, *, check_variant: bool = True) -> PureGravityResult:
    """Series solution of the one-matrix generating equation plus branch data."""
    spec = ModelSpec(kind="pure-gravity", c="symbolic", ng=ng, ltarget=lx)
    table = solve_series(spec)
    phi = pure_gravity_phi(table, lx, ng)
    p1 = table.gseries(Word([0]), ng)
    lo, hi = _pure_gravity_branches(p1, lx, ng)
    variant = {}
    first_mismatch = None
    if check_variant:
        variant = solve_pure_gravity_variant(min(ng, 4), min(lx, 6))
        for (k, n) in sorted(variant.keys() | {(1, 1), (2, 2)}, key=lambda t: (t[0] + 2 * t[1], t)):
            if n > min(ng, 4) or k > min(lx, 6):
                continue
            mine = table.p_poly(Word([0] * k), n)
            mine_v = Fraction(mine.coefficient(0)) if isinstance(mine, Poly) else mine
            if variant.get((k, n), Fraction(0)) != mine_v:
                first_mismatch = (k, n, variant.get((k, n), Fraction(0)), mine_v)
                break
    return PureGravityResult(table, phi, lo, hi, variant, first_mismatch)

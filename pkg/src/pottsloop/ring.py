"""Exact coefficient arithmetic.

Three nested coefficient rings, all exact:

  * ``Poly`` / ``RationalFunctionC``: univariate polynomials and reduced
    rational functions in the spin-coupling parameter ``c`` over arbitrary
    precision rationals (``fractions.Fraction``),
  * ``GSeries``: power series in the triangle coupling ``g``, truncated at a
    fixed order, with ``RationalFunctionC`` coefficients,
  * ``XLaurent``: Laurent series in the boundary fugacity ``x``, truncated
    above, with ``GSeries`` coefficients.

Everything is immutable after construction; all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Union

Rat = Union[int, Fraction]


def rat_to_str(q: Fraction) -> str:
    """Render a rational as ``p/q`` (or just ``p`` for integers)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rat_from_str(s: str) -> Fraction:
    return Fraction(s)


# ---------------------------------------------------------------------------
# integer-level polynomial helpers (coefficients ascending, no trailing zeros)
# ---------------------------------------------------------------------------


def _trim(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _content(coeffs: Iterable[int]) -> int:
    g = 0
    for a in coeffs:
        g = gcd(g, a)
        if g == 1:
            return 1
    return g


def _pseudo_rem(a: tuple, b: tuple) -> tuple:
    """Pseudo-remainder of integer polynomials (a mod b up to lc(b) powers)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    _trim(r)
    while len(r) - 1 >= db and r:
        top = r[-1]
        dr = len(r) - 1
        r = [lb * x for x in r]
        shift = dr - db
        for j, bj in enumerate(b):
            r[shift + j] -= top * bj
        _trim(r)
    return tuple(r)


def _int_poly_gcd(a: tuple, b: tuple) -> tuple:
    """Primitive gcd of integer coefficient tuples, positive leading coeff."""
    a = tuple(a)
    b = tuple(b)
    if not a:
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        if r:
            k = _content(r)
            r = tuple(x // k for x in r)
        a, b = b, r
    if not a:
        return ()
    k = _content(a)
    if a[-1] < 0:
        k = -k
    return tuple(x // k for x in a)


class Poly:
    """Polynomial in ``c`` over the rationals.

    Coefficients are stored ascending as integers over one shared positive
    denominator, normalised so gcd(content, den) = 1.
    """

    __slots__ = ("coeffs", "den")

    def __init__(self, coeffs: Iterable[int] = (), den: int = 1):
        cs = _trim(list(int(a) for a in coeffs))
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("polynomial denominator is zero")
        if not cs:
            self.coeffs, self.den = (), 1
            return
        if den < 0:
            cs = [-a for a in cs]
            den = -den
        k = gcd(_content(cs), den)
        if k > 1:
            cs = [a // k for a in cs]
            den //= k
        self.coeffs = tuple(cs)
        self.den = den

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_fractions(fracs: Iterable[Rat]) -> "Poly":
        fracs = [Fraction(f) for f in fracs]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        return Poly([f.numerator * (den // f.denominator) for f in fracs], den)

    @staticmethod
    def constant(v: Rat) -> "Poly":
        v = Fraction(v)
        return Poly((v.numerator,), v.denominator)

    @staticmethod
    def from_dict(d: dict) -> "Poly":
        """Inverse of to_dict: exponent -> coefficient-string (or number) map."""
        if not d:
            return P_ZERO
        items = {int(e): Fraction(v) for e, v in d.items()}
        fr = [Fraction(0)] * (max(items) + 1)
        for e, v in items.items():
            fr[e] = v
        return Poly.from_fractions(fr)

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,) and self.den == 1

    @property
    def degree(self) -> int:
        """Degree, with degree(0) = -1."""
        return len(self.coeffs) - 1

    def coefficient(self, e: int) -> Fraction:
        if 0 <= e < len(self.coeffs):
            return Fraction(self.coeffs[e], self.den)
        return Fraction(0)

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return Fraction(self.coeffs[-1], self.den)

    def fractions(self) -> list:
        return [Fraction(a, self.den) for a in self.coeffs]

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a, b = self.coeffs, other.coeffs
        da, db = self.den, other.den
        out = [
            (a[i] if i < len(a) else 0) * db + (b[i] if i < len(b) else 0) * da
            for i in range(n)
        ]
        return Poly(out, da * db)

    def __neg__(self) -> "Poly":
        p = object.__new__(Poly)
        p.coeffs = tuple(-a for a in self.coeffs)
        p.den = self.den
        return p

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return P_ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out, self.den * other.den)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        r = P_ONE
        base = self
        while n:
            if n & 1:
                r = r * base
            base = base * base
            n >>= 1
        return r

    def scale(self, v: Rat) -> "Poly":
        v = Fraction(v)
        return Poly([a * v.numerator for a in self.coeffs], self.den * v.denominator)

    def shift_up(self, k: int) -> "Poly":
        """Multiply by c**k."""
        if not self.coeffs:
            return P_ZERO
        return Poly((0,) * k + self.coeffs, self.den)

    def evaluate(self, c0: Rat) -> Fraction:
        c0 = Fraction(c0)
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * c0 + a
        return acc / self.den

    # -- structure -----------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.coeffs == other.coeffs
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.coeffs, self.den))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs)):
            q = Fraction(self.coeffs[e], self.den)
            if q == 0:
                continue
            mag = rat_to_str(abs(q))
            if e == 0:
                term = mag
            else:
                var = "c" if e == 1 else f"c^{e}"
                term = var if mag == "1" else f"{mag}*{var}"
            if not parts:
                parts.append(term if q > 0 else "-" + term)
            else:
                parts.append(("+" if q > 0 else "-") + term)
        return "".join(parts)

    def to_dict(self) -> dict:
        """Exponent -> coefficient-string map (JSON form)."""
        return {
            str(e): rat_to_str(Fraction(a, self.den))
            for e, a in enumerate(self.coeffs)
            if a
        }


P_ZERO = Poly()
P_ONE = Poly((1,))
P_C = Poly((0, 1))


def _poly_divmod(a: Poly, b: Poly) -> tuple:
    """Exact long division over the rationals: a = q*b + r, deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    ra = a.fractions()
    rb = b.fractions()
    lb = rb[-1]
    q = [Fraction(0)] * max(len(ra) - len(rb) + 1, 0)
    while len(ra) >= len(rb) and any(ra):
        while ra and ra[-1] == 0:
            ra.pop()
        if len(ra) < len(rb):
            break
        f = ra[-1] / lb
        k = len(ra) - len(rb)
        q[k] = f
        for j, bj in enumerate(rb):
            ra[k + j] -= f * bj
        assert ra[-1] == 0
        ra.pop()
    return Poly.from_fractions(q), Poly.from_fractions(ra)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the rationals (primitive integer PRS underneath)."""
    g = _int_poly_gcd(a.coeffs, b.coeffs)
    if not g:
        return P_ZERO
    return Poly(g, g[-1])


class RationalFunctionC:
    """Reduced rational function in ``c``: gcd-free, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = P_ONE, *, reduce: bool = True):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = P_ZERO, P_ONE
            return
        if reduce and not den.is_one():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, _ = _poly_divmod(num, g)
                den, _ = _poly_divmod(den, g)
        if not den.is_one():
            lead = den.leading()
            if lead != 1:
                inv = 1 / lead
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_poly(p: Poly) -> "RationalFunctionC":
        r = object.__new__(RationalFunctionC)
        r.num, r.den = p, P_ONE
        return r

    @staticmethod
    def constant(v: Rat) -> "RationalFunctionC":
        return RationalFunctionC.from_poly(Poly.constant(v))

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def evaluate(self, c0: Rat) -> Fraction:
        d = self.den.evaluate(c0)
        if d == 0:
            raise ZeroDivisionError(f"pole of rational function at c = {c0}")
        return self.num.evaluate(c0) / d

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunctionC.constant(other)
        if not isinstance(other, RationalFunctionC):
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return RationalFunctionC.from_poly(self.num + other.num)
        num = self.num * other.den + other.num * self.den
        return RationalFunctionC(num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(RationalFunctionC)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunctionC.constant(other)
        if not isinstance(other, RationalFunctionC):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunctionC(self.num.scale(other), self.den, reduce=False)
        if not isinstance(other, RationalFunctionC):
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return RationalFunctionC.from_poly(self.num * other.num)
        return RationalFunctionC(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunctionC.constant(other)
        if not isinstance(other, RationalFunctionC):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunctionC(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunctionC.constant(other) / self

    def __pow__(self, n: int):
        r = RF_ONE
        base = self
        if n < 0:
            base = RF_ONE / base
            n = -n
        while n:
            if n & 1:
                r = r * base
            base = base * base
            n >>= 1
        return r

    # -- structure ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFunctionC.constant(other)
        return (
            isinstance(other, RationalFunctionC)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunctionC({self})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        ns = str(self.num)
        if self.num.degree > 0 and ("+" in ns[1:] or "-" in ns[1:]):
            ns = f"({ns})"
        return f"{ns}/({self.den})"

    def to_json(self) -> dict:
        out = {"num": self.num.to_dict()}
        if not self.den.is_one():
            out["den"] = self.den.to_dict()
        return out


RF_ZERO = RationalFunctionC.from_poly(P_ZERO)
RF_ONE = RationalFunctionC.from_poly(P_ONE)
RF_C = RationalFunctionC.from_poly(P_C)


def _as_rf(v) -> RationalFunctionC:
    if isinstance(v, RationalFunctionC):
        return v
    if isinstance(v, Poly):
        return RationalFunctionC.from_poly(v)
    if isinstance(v, (int, Fraction)):
        return RationalFunctionC.constant(v)
    raise TypeError(f"cannot coerce {type(v).__name__} to RationalFunctionC")


class GSeries:
    """Power series in ``g`` truncated at order ``ng`` (inclusive)."""

    __slots__ = ("coeffs", "ng")

    def __init__(self, coeffs, ng: int):
        coeffs = tuple(_as_rf(v) for v in coeffs)
        if len(coeffs) < ng + 1:
            coeffs = coeffs + (RF_ZERO,) * (ng + 1 - len(coeffs))
        elif len(coeffs) > ng + 1:
            coeffs = coeffs[: ng + 1]
        self.coeffs = coeffs
        self.ng = ng

    @staticmethod
    def zero(ng: int) -> "GSeries":
        return GSeries((), ng)

    @staticmethod
    def one(ng: int) -> "GSeries":
        return GSeries((RF_ONE,), ng)

    @staticmethod
    def g_power(k: int, ng: int) -> "GSeries":
        if k > ng:
            return GSeries.zero(ng)
        return GSeries((RF_ZERO,) * k + (RF_ONE,), ng)

    @staticmethod
    def constant(v, ng: int) -> "GSeries":
        return GSeries((_as_rf(v),), ng)

    def _check(self, other: "GSeries"):
        if self.ng != other.ng:
            raise ValueError(f"mismatched g truncation orders {self.ng} != {other.ng}")

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.coeffs)

    def __getitem__(self, n: int) -> RationalFunctionC:
        return self.coeffs[n]

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Poly, RationalFunctionC)):
            other = GSeries.constant(other, self.ng)
        if not isinstance(other, GSeries):
            return NotImplemented
        self._check(other)
        return GSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.ng)

    __radd__ = __add__

    def __neg__(self):
        return GSeries(tuple(-a for a in self.coeffs), self.ng)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Poly, RationalFunctionC)):
            other = GSeries.constant(other, self.ng)
        if not isinstance(other, GSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly, RationalFunctionC)):
            v = _as_rf(other)
            return GSeries(tuple(a * v for a in self.coeffs), self.ng)
        if not isinstance(other, GSeries):
            return NotImplemented
        self._check(other)
        out = [RF_ZERO] * (self.ng + 1)
        for i, ai in enumerate(self.coeffs):
            if ai.is_zero():
                continue
            for j in range(self.ng + 1 - i):
                bj = other.coeffs[j]
                if not bj.is_zero():
                    out[i + j] = out[i + j] + ai * bj
        return GSeries(tuple(out), self.ng)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = GSeries.one(self.ng)
        base = self
        while n:
            if n & 1:
                r = r * base
            base = base * base
            n >>= 1
        return r

    def shift_g(self, k: int) -> "GSeries":
        """Multiply by g**k, truncating."""
        return GSeries((RF_ZERO,) * k + self.coeffs, self.ng)

    def retruncate(self, ng: int) -> "GSeries":
        if ng > self.ng:
            raise ValueError("cannot extend a truncated series")
        return GSeries(self.coeffs[: ng + 1], ng)

    def evaluate_c(self, c0: Rat) -> list:
        return [v.evaluate(c0) for v in self.coeffs]

    def evaluate(self, c0: Rat, g0: Rat) -> Fraction:
        g0 = Fraction(g0)
        acc = Fraction(0)
        for v in reversed(self.coeffs):
            acc = acc * g0 + v.evaluate(c0)
        return acc

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GSeries)
            and self.ng == other.ng
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.ng))

    def __repr__(self):
        return f"GSeries({self})"

    def __str__(self):
        parts = []
        for n, v in enumerate(self.coeffs):
            if v.is_zero():
                continue
            vs = str(v)
            if n == 0:
                parts.append(vs)
                continue
            gp = "g" if n == 1 else f"g^{n}"
            if vs == "1":
                parts.append(gp)
            else:
                if "+" in vs[1:] or "-" in vs[1:]:
                    vs = f"({vs})"
                parts.append(f"{vs}*{gp}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {str(n): str(v) for n, v in enumerate(self.coeffs) if not v.is_zero()}


# Laurent series in x cannot sink below this exponent; y**5 with y starting
# at x**-2 reaches exactly -10.
X_LOW_FLOOR = -10


class XLaurent:
    """Laurent series in ``x``: exponents from ``low`` to ``nx`` inclusive."""

    __slots__ = ("low", "coeffs", "nx", "ng")

    def __init__(self, low: int, coeffs, nx: int, ng: int):
        coeffs = list(coeffs)
        # trim zero coefficients from the low end, then clamp above
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
            low += 1
        if len(coeffs) > nx - low + 1:
            coeffs = coeffs[: nx - low + 1]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            low = 0
        if low < X_LOW_FLOOR:
            raise ValueError(f"Laurent series low exponent {low} below {X_LOW_FLOOR}")
        self.low = low
        self.coeffs = tuple(coeffs)
        self.nx = nx
        self.ng = ng

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(nx: int, ng: int) -> "XLaurent":
        return XLaurent(0, (), nx, ng)

    @staticmethod
    def x_power(k: int, nx: int, ng: int) -> "XLaurent":
        return XLaurent(k, (GSeries.one(ng),), nx, ng)

    @staticmethod
    def constant(v, nx: int, ng: int) -> "XLaurent":
        if isinstance(v, GSeries):
            return XLaurent(0, (v,), nx, ng)
        return XLaurent(0, (GSeries.constant(v, ng),), nx, ng)

    @staticmethod
    def from_coeffs(pairs, nx: int, ng: int) -> "XLaurent":
        """Build from (exponent, GSeries) pairs."""
        pairs = sorted(pairs)
        if not pairs:
            return XLaurent.zero(nx, ng)
        low = pairs[0][0]
        coeffs = [GSeries.zero(ng)] * (pairs[-1][0] - low + 1)
        for e, v in pairs:
            coeffs[e - low] = coeffs[e - low] + v
        return XLaurent(low, coeffs, nx, ng)

    # -- queries -----------------------------------------------------------

    def coefficient(self, e: int) -> GSeries:
        if self.low <= e < self.low + len(self.coeffs):
            return self.coeffs[e - self.low]
        return GSeries.zero(self.ng)

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        for i, v in enumerate(self.coeffs):
            if not v.is_zero():
                yield self.low + i, v

    def _check(self, other: "XLaurent"):
        if self.nx != other.nx or self.ng != other.ng:
            raise ValueError("mismatched Laurent truncations")

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction, Poly, RationalFunctionC, GSeries)):
            return XLaurent.constant(
                other if isinstance(other, GSeries) else GSeries.constant(other, self.ng),
                self.nx,
                self.ng,
            )
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if not isinstance(other, XLaurent):
            return NotImplemented
        self._check(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.low, other.low)
        hi = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        out = []
        for e in range(low, hi):
            out.append(self.coefficient(e) + other.coefficient(e))
        return XLaurent(low, out, self.nx, self.ng)

    __radd__ = __add__

    def __neg__(self):
        return XLaurent(self.low, tuple(-v for v in self.coeffs), self.nx, self.ng)

    def __sub__(self, other):
        other = self._coerce(other)
        if not isinstance(other, XLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly, RationalFunctionC, GSeries)):
            v = other if isinstance(other, GSeries) else GSeries.constant(other, self.ng)
            return XLaurent(
                self.low, tuple(a * v for a in self.coeffs), self.nx, self.ng
            )
        if not isinstance(other, XLaurent):
            return NotImplemented
        self._check(other)
        if self.is_zero() or other.is_zero():
            return XLaurent.zero(self.nx, self.ng)
        low = self.low + other.low
        size = min(self.nx - low, len(self.coeffs) + len(other.coeffs) - 2) + 1
        if size <= 0:
            return XLaurent.zero(self.nx, self.ng)
        out = [GSeries.zero(self.ng)] * size
        for i, ai in enumerate(self.coeffs):
            if ai.is_zero():
                continue
            jmax = min(len(other.coeffs), size - i)
            for j in range(jmax):
                bj = other.coeffs[j]
                if not bj.is_zero():
                    out[i + j] = out[i + j] + ai * bj
        return XLaurent(low, out, self.nx, self.ng)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = XLaurent.x_power(0, self.nx, self.ng)
        base = self
        while n:
            if n & 1:
                r = r * base
            base = base * base
            n >>= 1
        return r

    def shift_x(self, k: int) -> "XLaurent":
        """Multiply by x**k."""
        return XLaurent(self.low + k, self.coeffs, self.nx, self.ng)

    def retruncate(self, nx: int, ng: int) -> "XLaurent":
        if nx > self.nx or ng > self.ng:
            raise ValueError("cannot extend a truncated series")
        return XLaurent(self.low, [g.retruncate(ng) for g in self.coeffs], nx, ng)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, XLaurent)
            and self.nx == other.nx
            and self.ng == other.ng
            and self.low == other.low
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.low, self.coeffs, self.nx, self.ng))

    def __repr__(self):
        return f"XLaurent({self})"

    def __str__(self):
        parts = []
        for e, v in self.items():
            vs = str(v)
            if " + " in vs or "+" in vs[1:] or "-" in vs[1:]:
                vs = f"({vs})"
            if e == 0:
                parts.append(vs)
            else:
                xp = "x" if e == 1 else f"x^{e}"
                parts.append(xp if vs == "1" else f"{vs}*{xp}")
        return " + ".join(parts) if parts else "0"


def xlaurent_grade_mask(a: XLaurent, cap: int, gweight: int = 1) -> XLaurent:
    """Zero every slot with x-degree + gweight * g-degree above ``cap``.

    Truncated Laurent arithmetic is exact on such a sloped region whenever
    every negative x power carries at least 1/gweight as many powers of g:
    slot grades are then nonnegative and add under multiplication, so
    contributions from beyond the cap can never land inside it.
    """
    out = []
    for e, gs in zip(range(a.low, a.low + len(a.coeffs)), a.coeffs):
        nmax = (cap - e) // gweight if e <= cap else -1
        if nmax >= a.ng:
            out.append(gs)
        elif nmax < 0:
            out.append(GSeries.zero(a.ng))
        else:
            out.append(GSeries(gs.coeffs[: nmax + 1], a.ng))
    return XLaurent(a.low, out, a.nx, a.ng)


def xlaurent_inverse(a: XLaurent, *, grade_cap: int | None = None, gweight: int = 1) -> XLaurent:
    """Series inverse of a Laurent series whose (x^0, g^0) part is a unit.

    Requires the rest of ``a`` to be topologically nilpotent within the
    truncation, which holds whenever every other monomial carries a positive
    power of g or of x.  With ``grade_cap`` the computation is restricted to
    the sloped region described in :func:`xlaurent_grade_mask`, where it is
    exact; slots beyond the cap come out zero.
    """
    u = a.coefficient(0)[0]
    if u.is_zero():
        raise ValueError("series inverse needs a unit constant term")

    def cap(v):
        return xlaurent_grade_mask(v, grade_cap, gweight) if grade_cap is not None else v

    a = cap(a)
    one = XLaurent.x_power(0, a.nx, a.ng)
    b = XLaurent.constant(GSeries.constant(RF_ONE / u, a.ng), a.nx, a.ng)
    # Newton doubling: b <- b*(2 - a*b)
    for _ in range(64):
        err = cap(one - a * b)
        if err.is_zero():
            return b
        b = cap(b + b * err)
    raise ArithmeticError("series inverse did not converge; input not invertible")


def xlaurent_sqrt(a: XLaurent, *, grade_cap: int | None = None, gweight: int = 1) -> XLaurent:
    """Square root of a Laurent series whose (x^0, g^0) part is 1."""
    u = a.coefficient(0)[0]
    if not u.is_one():
        raise ValueError("series square root needs constant term 1")

    def cap(v):
        return xlaurent_grade_mask(v, grade_cap, gweight) if grade_cap is not None else v

    a = cap(a)
    half = Fraction(1, 2)
    b = XLaurent.x_power(0, a.nx, a.ng)
    for _ in range(64):
        err = cap(a - b * b)
        if err.is_zero():
            return b
        binv = xlaurent_inverse(b, grade_cap=grade_cap, gweight=gweight)
        b = cap(b + (err * binv) * half)
    raise ArithmeticError("series square root did not converge")

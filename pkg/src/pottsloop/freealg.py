"""Words over the three boundary letters and truncated non-commutative series.

A boundary condition of a triangulated disk is a word in the letters
``{0, 1, 2}`` (one letter per boundary edge, read from the marked edge).
``NCSeries`` maps words to ``GSeries`` coefficients and carries the boundary
derivative operators that add or strip letters on either side.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .ring import GSeries

LETTERS = (0, 1, 2)


class Word:
    """Immutable word over {0, 1, 2}, stored as a packed integer.

    Letters are packed two bits each, first letter in the lowest bits, which
    keeps prefix/suffix surgery cheap in the solver's inner loops.
    """

    __slots__ = ("n", "bits")

    def __init__(self, letters: Iterable[int] = ()):
        bits = 0
        n = 0
        for a in letters:
            if a not in (0, 1, 2):
                raise ValueError(f"letter {a!r} outside alphabet {{0,1,2}}")
            bits |= a << (2 * n)
            n += 1
        self.n = n
        self.bits = bits

    @staticmethod
    def _raw(n: int, bits: int) -> "Word":
        w = object.__new__(Word)
        w.n = n
        w.bits = bits
        return w

    @staticmethod
    def from_string(s: str) -> "Word":
        s = s.strip()
        if s in ("", "ε"):
            return EMPTY_WORD
        return Word(int(ch) for ch in s)

    # -- queries -----------------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if isinstance(i, slice):
            return Word(self.letters()[i])
        if i < 0:
            i += self.n
        if not 0 <= i < self.n:
            raise IndexError("letter index out of range")
        return (self.bits >> (2 * i)) & 3

    def __iter__(self):
        b = self.bits
        for _ in range(self.n):
            yield b & 3
            b >>= 2

    def letters(self) -> tuple:
        return tuple(self)

    def __bool__(self) -> bool:
        return self.n > 0

    # -- surgery -----------------------------------------------------------

    def __add__(self, other: "Word") -> "Word":
        return Word._raw(self.n + other.n, self.bits | (other.bits << (2 * self.n)))

    def prepend(self, a: int) -> "Word":
        return Word._raw(self.n + 1, a | (self.bits << 2))

    def append(self, a: int) -> "Word":
        return Word._raw(self.n + 1, self.bits | (a << (2 * self.n)))

    def drop_first(self) -> "Word":
        return Word._raw(self.n - 1, self.bits >> 2)

    def drop_last(self) -> "Word":
        return Word._raw(self.n - 1, self.bits & ((1 << (2 * (self.n - 1))) - 1))

    def reverse(self) -> "Word":
        return Word(reversed(self.letters()))

    def rotations(self):
        """All cyclic rotations, starting with the word itself."""
        ls = self.letters()
        for i in range(max(self.n, 1)):
            yield Word(ls[i:] + ls[:i])

    def relabel(self, perm: Sequence[int]) -> "Word":
        return Word(perm[a] for a in self)

    def count(self, a: int) -> int:
        return sum(1 for b in self if b == a)

    # -- structure -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.n == other.n and self.bits == other.bits

    def __hash__(self):
        return hash((self.n, self.bits))

    def sort_key(self):
        return (self.n, self.letters())

    def __repr__(self):
        return f"Word('{self}')"

    def __str__(self):
        if self.n == 0:
            return "ε"
        return "".join(str(a) for a in self)


EMPTY_WORD = Word()


def all_words(length: int):
    """All words of the given length in lexicographic letter order."""
    if length == 0:
        yield EMPTY_WORD
        return
    import itertools

    for ls in itertools.product(LETTERS, repeat=length):
        yield Word(ls)


class NCSeries:
    """Truncated non-commutative power series: word -> GSeries coefficient.

    Words longer than ``lmax`` are dropped; absent words mean zero.
    """

    __slots__ = ("terms", "lmax", "ng")

    def __init__(self, terms: dict, lmax: int, ng: int):
        self.terms = {
            w: v
            for w, v in terms.items()
            if len(w) <= lmax and not v.is_zero()
        }
        self.lmax = lmax
        self.ng = ng

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(lmax: int, ng: int) -> "NCSeries":
        return NCSeries({}, lmax, ng)

    @staticmethod
    def unit(lmax: int, ng: int) -> "NCSeries":
        return NCSeries({EMPTY_WORD: GSeries.one(ng)}, lmax, ng)

    @staticmethod
    def monomial(word: Word, lmax: int, ng: int, coeff=None) -> "NCSeries":
        return NCSeries({word: coeff if coeff is not None else GSeries.one(ng)}, lmax, ng)

    # -- queries ------------------------------------------------------------

    def coefficient(self, word: Word) -> GSeries:
        return self.terms.get(word, GSeries.zero(self.ng))

    def is_zero(self) -> bool:
        return not self.terms

    def words(self):
        return sorted(self.terms, key=Word.sort_key)

    def _check(self, other: "NCSeries"):
        if self.lmax != other.lmax or self.ng != other.ng:
            raise ValueError("mismatched series truncations")

    # -- linear structure ------------------------------------------------------

    def __add__(self, other: "NCSeries") -> "NCSeries":
        self._check(other)
        out = dict(self.terms)
        for w, v in other.terms.items():
            cur = out.get(w)
            out[w] = v if cur is None else cur + v
        return NCSeries(out, self.lmax, self.ng)

    def __neg__(self) -> "NCSeries":
        return NCSeries({w: -v for w, v in self.terms.items()}, self.lmax, self.ng)

    def __sub__(self, other: "NCSeries") -> "NCSeries":
        return self + (-other)

    def scale(self, v) -> "NCSeries":
        return NCSeries({w: g * v for w, g in self.terms.items()}, self.lmax, self.ng)

    # -- products and operators -------------------------------------------------

    def __mul__(self, other: "NCSeries") -> "NCSeries":
        """Concatenation (Cauchy) product; words beyond lmax dropped."""
        self._check(other)
        out: dict = {}
        for u, au in self.terms.items():
            for v, bv in other.terms.items():
                if len(u) + len(v) > self.lmax:
                    continue
                w = u + v
                p = au * bv
                cur = out.get(w)
                out[w] = p if cur is None else cur + p
        return NCSeries(out, self.lmax, self.ng)

    def mul_letter_left(self, a: int) -> "NCSeries":
        """Multiply by the letter ``a`` on the left."""
        out = {}
        for w, v in self.terms.items():
            if len(w) + 1 <= self.lmax:
                out[w.prepend(a)] = v
        return NCSeries(out, self.lmax, self.ng)

    def mul_letter_right(self, a: int) -> "NCSeries":
        out = {}
        for w, v in self.terms.items():
            if len(w) + 1 <= self.lmax:
                out[w.append(a)] = v
        return NCSeries(out, self.lmax, self.ng)

    def left_delta(self, a: int) -> "NCSeries":
        """Strip a leading ``a``; words starting otherwise are annihilated."""
        out = {}
        for w, v in self.terms.items():
            if len(w) and w[0] == a:
                out[w.drop_first()] = v
        return NCSeries(out, self.lmax, self.ng)

    def right_delta(self, a: int) -> "NCSeries":
        """Strip a trailing ``a``; words ending otherwise are annihilated."""
        out = {}
        for w, v in self.terms.items():
            if len(w) and w[-1] == a:
                out[w.drop_last()] = v
        return NCSeries(out, self.lmax, self.ng)

    def permute_letters(self, perm: Sequence[int]) -> "NCSeries":
        """Relabel every word letterwise; coefficients unchanged."""
        return NCSeries(
            {w.relabel(perm): v for w, v in self.terms.items()}, self.lmax, self.ng
        )

    def restrict(self, kill) -> "NCSeries":
        """Drop every word containing a killed letter."""
        kill = set(kill)
        out = {
            w: v
            for w, v in self.terms.items()
            if not any(a in kill for a in w)
        }
        return NCSeries(out, self.lmax, self.ng)

    # -- structure -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NCSeries)
            and self.lmax == other.lmax
            and self.ng == other.ng
            and self.terms == other.terms
        )

    def __repr__(self):
        n = len(self.terms)
        return f"NCSeries({n} words, lmax={self.lmax}, ng={self.ng})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in self.words():
            parts.append(f"[{w}] {self.terms[w]}")
        return "\n".join(parts)


def apply_operator_string(ops, a: NCSeries) -> NCSeries:
    """Apply a sequence of boundary derivative operators in the given order.

    Each element of ``ops`` is ``(side, letter)`` with side ``"L"`` or
    ``"R"``.  A left operator strips a leading letter, a right operator a
    trailing one, so extracting the coefficient family of a prefix ``p``
    uses the reversed string of left operators.
    """
    for side, letter in ops:
        if side in ("L", "left"):
            a = a.left_delta(letter)
        elif side in ("R", "right"):
            a = a.right_delta(letter)
        else:
            raise ValueError(f"operator side {side!r} not 'L' or 'R'")
    return a

"""Words in the three-strand braid group and an exact equality test.

Letters: ``a`` = sigma_1, ``b`` = sigma_2, upper case for inverses.  Internally
a word is a tuple over {1, 2, -1, -2}.  Two words are compared through the
reduced Burau representation, which is faithful on B_3:

    sigma_1 -> [[-t, 1], [0, 1]],    sigma_2 -> [[1, 0], [t, -t]].
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

LETTERS = {"a": 1, "b": 2, "A": -1, "B": -2}
_NAMES = {v: k for k, v in LETTERS.items()}


class WordError(ValueError):
    pass


@dataclass(frozen=True)
class Laurent:
    """Integer Laurent polynomial in t, stored as sorted (exponent, coeff) pairs."""
    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def of(cls, mapping: dict[int, int] | None = None) -> "Laurent":
        items = sorted((e, c) for e, c in (mapping or {}).items() if c)
        return cls(tuple(items))

    @classmethod
    def const(cls, c: int) -> "Laurent":
        return cls.of({0: c})

    @classmethod
    def mono(cls, c: int, e: int) -> "Laurent":
        return cls.of({e: c})

    def __add__(self, other: "Laurent") -> "Laurent":
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return Laurent.of(acc)

    def __neg__(self) -> "Laurent":
        return Laurent(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return Laurent.of(acc)

    def is_zero(self) -> bool:
        return not self.terms

    def unit_inverse(self) -> "Laurent":
        """Inverse of a unit +-t^k."""
        if len(self.terms) != 1 or abs(self.terms[0][1]) != 1:
            raise ZeroDivisionError(f"{self} is not a unit")
        e, c = self.terms[0]
        return Laurent.mono(c, -e)

    def __call__(self, t):
        return sum(c * t ** e for e, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            coeff = str(c) if (abs(c) != 1 or e == 0) else ("-" if c < 0 else "")
            parts.append(coeff + mono)
        return " + ".join(parts).replace("+ -", "- ")


ZERO = Laurent()
ONE = Laurent.const(1)


@dataclass(frozen=True)
class LaurentMatrix:
    rows: tuple[tuple[Laurent, Laurent], tuple[Laurent, Laurent]]

    @classmethod
    def identity(cls) -> "LaurentMatrix":
        return cls(((ONE, ZERO), (ZERO, ONE)))

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return LaurentMatrix(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    def det(self) -> Laurent:
        (a, b), (c, d) = self.rows
        return a * d - b * c

    def inverse(self) -> "LaurentMatrix":
        (a, b), (c, d) = self.rows
        u = self.det().unit_inverse()
        return LaurentMatrix(((d * u, -b * u), (-c * u, a * u)))

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.rows) + "]"


_T = Laurent.mono(1, 1)
GENERATORS = {
    1: LaurentMatrix(((-_T, ONE), (ZERO, ONE))),
    2: LaurentMatrix(((ONE, ZERO), (_T, -_T))),
}
GENERATORS[-1] = GENERATORS[1].inverse()
GENERATORS[-2] = GENERATORS[2].inverse()


def parse_word(text: str | Sequence[int]) -> tuple[int, ...]:
    if not isinstance(text, str):
        word = tuple(text)
        bad = [x for x in word if x not in _NAMES]
        if bad:
            raise WordError(f"illegal generator {bad[0]!r}")
        return word
    out = []
    for pos, ch in enumerate(text):
        if ch.isspace() or ch in "·*.1":  # "1" is the identity
            continue
        if ch not in LETTERS:
            raise WordError(f"illegal letter {ch!r} at position {pos}; use a, b, A, B")
        out.append(LETTERS[ch])
    return tuple(out)


def format_word(word: Iterable[int]) -> str:
    return "".join(_NAMES[x] for x in word) or "1"


def free_reduce(word: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse_word(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(word))


def burau(word) -> LaurentMatrix:
    m = LaurentMatrix.identity()
    for x in parse_word(word):
        m = m @ GENERATORS[x]
    return m


def words_equal(w1, w2) -> bool:
    return burau(w1) == burau(w2)


def permutation_image(word) -> tuple[int, int, int]:
    """Image in S_3 as the arrangement of strands 1, 2, 3 after the word."""
    strands = [1, 2, 3]
    for x in parse_word(word):
        i = abs(x) - 1
        strands[i], strands[i + 1] = strands[i + 1], strands[i]
    return tuple(strands)


def is_pure(word) -> bool:
    return permutation_image(word) == (1, 2, 3)


def cycle_notation(perm: Sequence[int]) -> str:
    seen, cycles = set(), []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cyc, k = [], start
        while k not in seen:
            seen.add(k)
            cyc.append(k)
            k = perm[k - 1]
        if len(cyc) > 1:
            cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def verify_pure_braid_generation(f_word: str = "aabaab", f_rhs: str = "abaaba",
                       shifted_rhs: str = "baaB",
                       pure_words: Sequence[str] = ("aa", "bb", "abaaba", "baaB")) -> dict:
    """Check that b a^2 b^-1 lies in K = <a^2, b^2, (aba)^2> inside the pure braid group.

    (i)   f := a^2 b a^2 b equals (aba)^2;
    (ii)  a^-2 f b^-2 equals b a^2 b^-1;
    (iii) the words involved are pure braids.
    Arguments exist so that tests can feed in broken identities.
    """
    f = parse_word(f_word)
    shifted = (-1, -1) + f + (-2, -2)
    checks = []
    checks.append({"name": "f = (aba)^2", "lhs": format_word(f), "rhs": f_rhs,
                   "pass": words_equal(f, f_rhs)})
    checks.append({"name": "a^-2 f b^-2 = b a^2 b^-1", "lhs": format_word(shifted),
                   "rhs": shifted_rhs, "pass": words_equal(shifted, shifted_rhs)})
    purity = {w: is_pure(w) for w in pure_words}
    checks.append({"name": "pure braids", "words": {w: cycle_notation(permutation_image(w))
                                                    for w in pure_words},
                   "pass": all(purity.values())})
    braid_relation = burau("aba") == burau("bab")
    ok = all(c["pass"] for c in checks) and braid_relation
    return {
        "checks": checks,
        "braid_relation_in_oracle": braid_relation,
        "pass": ok,
        "conclusion": ("a^2, b^2 and b a^2 b^-1 = a^-2 (aba)^2 b^-2 lie in K, so K is the whole "
                       "pure braid group P_3" if ok else "identities failed; no conclusion"),
    }

"""Cyclotomic integers and rational-prime splitting in Q(zeta_m).

Elements of Z[zeta_m] are stored as integer coordinate tuples on the power
basis 1, zeta, ..., zeta^(phi(m)-1), i.e. reduced modulo the m-th cyclotomic
polynomial.  Splitting of an unramified rational prime q is computed from the
multiplicative order of q mod m; no factorization of ideals is ever needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import arith, zpoly

__all__ = [
    "ModulusMismatch",
    "RamifiedPrime",
    "NotTotallySplit",
    "ElementParseError",
    "CycloModulus",
    "cyclotomic_polynomial",
    "CycloElement",
    "cyclo_mul",
    "parse_cyclo_element",
    "SplittingData",
    "splitting_data",
    "is_inert",
    "PrimeAbove",
    "primes_above",
]


class ModulusMismatch(ValueError):
    """Raised when combining elements that live in different cyclotomic fields."""


class RamifiedPrime(ValueError):
    """Raised when a prime divides the conductor and the requested law needs it unramified."""


class NotTotallySplit(ValueError):
    """Raised when a residue-degree-1 enumeration is asked of a prime that is not totally split."""


class ElementParseError(ValueError):
    """Raised when a zeta-notation string does not match the accepted grammar."""


@lru_cache(maxsize=None)
def _cyclo_poly_coeffs(m: int) -> tuple[int, ...]:
    """Coefficients (constant first) of the m-th cyclotomic polynomial.

    Computed by exact division: Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
    """
    if m < 1:
        raise ValueError("conductor must be >= 1")
    num = [0] * m + [1]
    num[0] = -1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = zpoly.mul(den, list(_cyclo_poly_coeffs(d)))
    return tuple(zpoly.div_exact(num, den))


@dataclass(frozen=True)
class CycloModulus:
    """The field Q(zeta_m): conductor, degree, and the reduction polynomial."""

    m: int
    phi: int
    poly: tuple[int, ...]  # m-th cyclotomic polynomial, constant term first

    def __repr__(self) -> str:  # keep reprs short in test diffs
        return f"CycloModulus(m={self.m})"


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> CycloModulus:
    """Build the reduction data for Q(zeta_m)."""
    coeffs = _cyclo_poly_coeffs(m)
    return CycloModulus(m=m, phi=len(coeffs) - 1, poly=coeffs)


def _reduce(mod: CycloModulus, raw: Sequence[int]) -> tuple[int, ...]:
    """Reduce an integer polynomial in zeta to the power basis."""
    _, rem = zpoly.divmod_monicish(list(raw), list(mod.poly))
    rem = rem + [0] * (mod.phi - len(rem))
    return tuple(rem)


@dataclass(frozen=True)
class CycloElement:
    """An element of Z[zeta_m] on the power basis."""

    modulus: CycloModulus
    coeffs: tuple[int, ...]

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_coeffs(mod: CycloModulus, raw: Sequence[int]) -> "CycloElement":
        """Element from an arbitrary-degree coefficient list (reduced here)."""
        return CycloElement(mod, _reduce(mod, raw))

    @staticmethod
    def integer(mod: CycloModulus, n: int) -> "CycloElement":
        return CycloElement.from_coeffs(mod, [n])

    @staticmethod
    def zeta_power(mod: CycloModulus, k: int) -> "CycloElement":
        k %= mod.m
        return CycloElement.from_coeffs(mod, [0] * k + [1])

    # -- ring operations ----------------------------------------------

    def _check(self, other: "CycloElement") -> None:
        if self.modulus.m != other.modulus.m:
            raise ModulusMismatch(
                f"conductor {self.modulus.m} vs {other.modulus.m}"
            )

    def __add__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        return CycloElement(
            self.modulus,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        return CycloElement(
            self.modulus,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.modulus, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        raw = zpoly.mul(list(self.coeffs), list(other.coeffs))
        return CycloElement.from_coeffs(self.modulus, raw)

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_constant(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("element is not a rational integer")
        return self.coeffs[0] if self.coeffs else 0

    def conjugate(self, i: int) -> "CycloElement":
        """Image under zeta |-> zeta^i, for i coprime to the conductor."""
        m = self.modulus.m
        if math.gcd(i, m) != 1:
            raise arith.NotCoprime(f"{i} is not coprime to {m}")
        raw = [0] * m
        for k, c in enumerate(self.coeffs):
            raw[(k * i) % m] += c
        return CycloElement.from_coeffs(self.modulus, raw)

    def norm(self) -> int:
        """Field norm to Q: the product of all Galois conjugates."""
        m = self.modulus.m
        acc = CycloElement.integer(self.modulus, 1)
        for i in range(1, m + 1):
            if math.gcd(i, m) == 1:
                acc = acc * self.conjugate(i)
        if not acc.is_constant():
            raise ArithmeticError("norm did not reduce to a rational integer")
        return acc.constant_value()

    # -- display ------------------------------------------------------

    def render(self, unicode_ok: bool = True) -> str:
        return _render_element(self, unicode_ok)

    def __str__(self) -> str:
        return self.render()


def cyclo_mul(mod: CycloModulus, factors: Iterable[CycloElement]) -> CycloElement:
    """Product of several elements of Q(zeta_m)."""
    acc = CycloElement.integer(mod, 1)
    for f in factors:
        acc = acc * f
    return acc


# ---------------------------------------------------------------------------
# zeta-notation rendering and parsing
# ---------------------------------------------------------------------------

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_UNSUB = {s: d for d, s in zip("0123456789", "₀₁₂₃₄₅₆₇₈₉")}
_UNSUP = {s: d for d, s in zip("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")}


def _zeta_token(m: int, e: int, unicode_ok: bool) -> str:
    if unicode_ok:
        tok = "ζ" + str(m).translate(_SUB)
        if e > 1:
            tok += str(e).translate(_SUP)
        return tok
    tok = f"zeta{m}"
    if e > 1:
        tok += f"^{e}"
    return tok


def _render_element(el: CycloElement, unicode_ok: bool) -> str:
    coeffs = el.coeffs
    m = el.modulus.m
    parts: list[str] = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            tok = _zeta_token(m, e, unicode_ok)
            body = tok if mag == 1 else f"{mag}{tok}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    if not parts:
        return "0"
    return " ".join(parts)


def _translate_marks(s: str) -> str:
    """Rewrite sub/superscript runs into ASCII ``{sub}``/``^`` forms."""
    out: list[str] = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch in _UNSUB:
            run = []
            while i < len(s) and s[i] in _UNSUB:
                run.append(_UNSUB[s[i]])
                i += 1
            out.append("{" + "".join(run) + "}")
            continue
        if ch in _UNSUP:
            run = []
            while i < len(s) and s[i] in _UNSUP:
                run.append(_UNSUP[s[i]])
                i += 1
            out.append("^" + "".join(run))
            continue
        out.append(ch)
        i += 1
    return "".join(out)


def parse_cyclo_element(text: str, m: int) -> CycloElement:
    """Parse zeta-notation like ``2ζ₇³ + ζ₇² + 1`` into Z[zeta_m].

    Also accepts the ASCII spelling ``2*zeta7^3 + zeta7^2 + 1``.  A conductor
    written in the string (subscript or the digits after ``zeta``) must match
    ``m``.  Exponents >= m are folded with zeta^m = 1.
    """
    mod = cyclotomic_polynomial(m)
    s = text.replace("−", "-").replace("–", "-")
    s = _translate_marks(s).replace("ζ", "zeta")
    s = s.replace(" ", "")
    if not s:
        raise ElementParseError("empty element string")
    # Split into signed terms; signs only occur between terms in the grammar.
    terms: list[str] = []
    cur = ""
    for ch in s:
        if ch in "+-" and cur:
            terms.append(cur)
            cur = ch if ch == "-" else ""
        elif ch in "+-" and not cur:
            cur = ch if ch == "-" else ""
        else:
            cur += ch
    if cur in ("", "-"):
        raise ElementParseError(f"dangling sign in {text!r}")
    terms.append(cur)

    import re

    term_re = re.compile(
        r"^(-?)(\d+)?(?:\*?zeta(?:\{(\d+)\}|(\d+))?(?:\^(\d+))?)?$"
    )
    raw = [0] * m
    saw_term = False
    for t in terms:
        mt = term_re.match(t)
        if not mt:
            raise ElementParseError(f"bad term {t!r} in {text!r}")
        sign_s, digits, sub_cond, ascii_cond, exp_s = mt.groups()
        has_zeta = "zeta" in t
        if digits is None and not has_zeta:
            raise ElementParseError(f"bad term {t!r} in {text!r}")
        cond_s = sub_cond or ascii_cond
        if cond_s is not None and int(cond_s) != m:
            raise ElementParseError(
                f"conductor {cond_s} in {text!r} does not match {m}"
            )
        coef = int(digits) if digits is not None else 1
        if sign_s == "-":
            coef = -coef
        if has_zeta:
            exp = int(exp_s) if exp_s is not None else 1
        else:
            exp = 0
        raw[exp % m] += coef
        saw_term = True
    if not saw_term:
        raise ElementParseError(f"no terms found in {text!r}")
    return CycloElement.from_coeffs(mod, raw)


# ---------------------------------------------------------------------------
# splitting laws
# ---------------------------------------------------------------------------


def match_up_to_unit(el: CycloElement, target: int) -> tuple[int, int] | None:
    """Does ``el`` equal ``target`` times a root of unity +-zeta^k?

    Returns (sign, k) with el = sign * target * zeta^k, preferring the exact
    match (1, 0) when it exists; None when no such unit works.
    """
    mod = el.modulus
    tgt = CycloElement.integer(mod, target)
    if el == tgt:
        return (1, 0)
    for k in range(mod.m):
        z = CycloElement.zeta_power(mod, k)
        cand = tgt * z
        if el == cand:
            return (1, k)
        if el == -cand:
            return (-1, k)
    return None


@dataclass(frozen=True)
class SplittingData:
    """Ramification/residue data (e, f, g) for a rational prime q in Q(zeta_m)."""

    q: int
    m: int
    e: int
    f: int
    g: int

    @property
    def classification(self) -> str:
        if self.e != 1:
            return "ramified"
        if self.f == 1:
            return "totally split"
        if self.g == 1:
            return "inert"
        return "partially split"


def splitting_data(q: int, m: int) -> SplittingData:
    """Splitting of the rational prime q in Q(zeta_m), q unramified.

    For an unramified q the residue degree is the multiplicative order of
    q mod m and e*f*g = phi(m) with e = 1.  Conductors m <= 2 give the
    rational field itself, where every prime trivially splits completely.
    Raises :class:`RamifiedPrime` when q divides m (with the usual caveat
    that m = 2q is really conductor q; no such m is used here).
    """
    if m < 1:
        raise ValueError("conductor must be >= 1")
    if not arith.is_prime(q):
        raise ValueError(f"{q} is not prime")
    if m <= 2:
        return SplittingData(q=q, m=m, e=1, f=1, g=1)
    if m % q == 0:
        raise RamifiedPrime(f"{q} divides the conductor {m}")
    f = arith.mult_order(q, m)
    phi = arith.euler_phi(m)
    return SplittingData(q=q, m=m, e=1, f=f, g=phi // f)


def is_inert(q: int, m: int) -> bool:
    """True when q generates (Z/m)*, i.e. stays prime in Q(zeta_m).

    Conductors m <= 2 are degree-1 fields, where "inert" is vacuously true.
    """
    sd = splitting_data(q, m)
    return sd.g == 1


@dataclass(frozen=True)
class PrimeAbove:
    """A degree-1 prime of Z[zeta_m] above q, as the ideal (q, zeta - root)."""

    q: int
    m: int
    root: int

    def render(self, unicode_ok: bool = True) -> str:
        z = "ζ" + str(self.m).translate(_SUB) if unicode_ok else f"zeta{self.m}"
        return f"({self.q}, {z} - {self.root})"


def primes_above(q: int, m: int) -> tuple[PrimeAbove, ...]:
    """The phi(m) degree-1 primes above a totally split q, by ascending root.

    Requires residue degree 1 (:class:`NotTotallySplit` otherwise); the roots
    of the m-th cyclotomic polynomial mod q are found by direct scan, which is
    fine for the desk-scale q this package selects.
    """
    sd = splitting_data(q, m)
    if sd.f != 1:
        raise NotTotallySplit(
            f"{q} has residue degree {sd.f} > 1 in conductor {m}"
        )
    mod = cyclotomic_polynomial(m)
    poly = list(mod.poly)
    roots = [a for a in range(q) if _eval_mod(poly, a, q) == 0]
    if len(roots) != mod.phi:
        raise ArithmeticError(
            f"expected {mod.phi} roots mod {q}, found {len(roots)}"
        )
    return tuple(PrimeAbove(q=q, m=m, root=r) for r in roots)


def _eval_mod(p: Sequence[int], x: int, q: int) -> int:
    acc = 0
    for c in reversed(list(p)):
        acc = (acc * x + c) % q
    return acc

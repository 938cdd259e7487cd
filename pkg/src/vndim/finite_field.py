"""Brute-force-verifiable structure of GL(2, F_q) and characters of F_{q^2}^x.

Two models of the quadratic extension are kept deliberately separate so they
can cross-validate:

* For character arithmetic, F_{q^2}^x is the cyclic group Z/(q^2 - 1) via a
  fixed generator g.  The character with index a sends g to
  exp(2*pi*i * a/(q^2-1)); F_q^x is the unique subgroup of order q - 1,
  generated by g^(q+1), so restricting the index-a character to it gives the
  index-(a mod q-1) character.  Everything about characters is then modular
  arithmetic, which is exact.

* For norm/trace/Hilbert-90 facts and for counting invertible matrices, the
  fields themselves are built explicitly as iterated quadratic extensions of
  Z/p, with the modulus x^2 + bx + c chosen deterministically (smallest (b, c)
  in the base field's enumeration order that is irreducible).

Standing hypothesis throughout: q is a power of an odd prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .errors import EvenResidue, NotPrimePower, TooLarge

#: Brute-force guard: enumerations scan q^4 matrices or q^2 field elements.
ENUMERATION_GUARD = 9


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimePower:
    """q = p^f with p an odd prime."""

    p: int
    f: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrimePower(f"{self.p} is not prime")
        if self.p == 2:
            raise EvenResidue("residue-field order must be odd")
        if self.f < 1:
            raise NotPrimePower(f"exponent must be >= 1, got {self.f}")

    @property
    def q(self) -> int:
        return self.p**self.f

    @classmethod
    def from_int(cls, q: int) -> "PrimePower":
        if q % 2 == 0:
            raise EvenResidue(f"residue-field order must be odd, got {q}")
        if q < 3:
            raise NotPrimePower(f"{q} is not an odd prime power")
        p = 3
        while q % p != 0:
            p += 2
            if p * p > q:
                p = q
        f = 0
        rest = q
        while rest % p == 0:
            rest //= p
            f += 1
        if rest != 1:
            raise NotPrimePower(f"{q} is not a prime power")
        return cls(p, f)


def as_prime_power(q) -> PrimePower:
    return q if isinstance(q, PrimePower) else PrimePower.from_int(q)


# -- explicit field model ----------------------------------------------------


class _PrimeField:
    """Z/p with elements 0..p-1."""

    def __init__(self, p: int):
        self.p = p
        self.order = p
        self.zero = 0
        self.one = 1

    def elements(self) -> Iterable[int]:
        return range(self.p)

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p


class _QuadraticExtension:
    """base[x]/(x^2 + bx + c); elements are pairs (lo, hi) = lo + hi*x."""

    def __init__(self, base):
        self.base = base
        self.order = base.order**2
        self.modulus = self._find_modulus()
        self.zero = (base.zero, base.zero)
        self.one = (base.one, base.zero)

    def _find_modulus(self) -> Tuple:
        # Smallest (b, c) in the base enumeration order with x^2 + bx + c
        # having no root; for a quadratic, no root means irreducible.
        base = self.base
        for b in base.elements():
            for c in base.elements():
                if all(
                    base.add(base.add(base.mul(t, t), base.mul(b, t)), c) != base.zero
                    for t in base.elements()
                ):
                    return (b, c)
        raise AssertionError("no irreducible quadratic over a finite field")

    def elements(self) -> Iterable[Tuple]:
        for hi in self.base.elements():
            for lo in self.base.elements():
                yield (lo, hi)

    def is_in_base(self, a) -> bool:
        return a[1] == self.base.zero

    def add(self, a, b):
        return (self.base.add(a[0], b[0]), self.base.add(a[1], b[1]))

    def neg(self, a):
        return (self.base.neg(a[0]), self.base.neg(a[1]))

    def mul(self, a, b):
        # (a0 + a1 x)(b0 + b1 x) with x^2 = -(bx + c)
        base = self.base
        b_mod, c_mod = self.modulus
        hi2 = base.mul(a[1], b[1])
        lo = base.add(base.mul(a[0], b[0]), base.neg(base.mul(hi2, c_mod)))
        hi = base.add(
            base.add(base.mul(a[0], b[1]), base.mul(a[1], b[0])),
            base.neg(base.mul(hi2, b_mod)),
        )
        return (lo, hi)


def _pow(field, a, n: int):
    result = field.one
    while n:
        if n & 1:
            result = field.mul(result, a)
        a = field.mul(a, a)
        n >>= 1
    return result


def _inverse(field, a):
    # order - 2 is tiny here; Fermat/Lagrange inversion is plenty.
    return _pow(field, a, field.order - 2)


def field_model(q) -> "_PrimeField | _QuadraticExtension":
    """Explicit model of F_q as an iterated quadratic extension of Z/p."""
    pp = as_prime_power(q)
    if pp.f & (pp.f - 1):
        raise NotPrimePower(
            f"explicit model only built for f a power of 2, got f={pp.f}"
        )
    field = _PrimeField(pp.p)
    f = pp.f
    while f > 1:
        field = _QuadraticExtension(field)
        f //= 2
    return field


# -- group orders ------------------------------------------------------------


@dataclass(frozen=True)
class GroupOrders:
    gl2_order: int
    borel_order: int
    borel_index: int


def group_orders(q) -> GroupOrders:
    """|GL(2,F_q)| = (q^2-1)(q^2-q), |Borel| = q(q-1)^2, index q+1."""
    n = as_prime_power(q).q
    return GroupOrders(
        gl2_order=(n**2 - 1) * (n**2 - n),
        borel_order=n * (n - 1) ** 2,
        borel_index=n + 1,
    )


@dataclass(frozen=True)
class EnumeratedOrders:
    counted_order: int
    counted_borel: int


def enumerate_gl2(q, max_q: int = ENUMERATION_GUARD) -> EnumeratedOrders:
    """Count invertible 2x2 matrices (and upper-triangular ones) by exhaustive scan.

    Independent oracle for group_orders: no formula, just q^4 determinant tests
    in the explicit field model.
    """
    pp = as_prime_power(q)
    if pp.q > max_q:
        raise TooLarge(f"q={pp.q} exceeds enumeration guard {max_q}")
    field = field_model(pp)
    elems = list(field.elements())
    total = 0
    upper = 0
    for a in elems:
        for b in elems:
            for c in elems:
                for d in elems:
                    det = field.add(field.mul(a, d), field.neg(field.mul(b, c)))
                    if det != field.zero:
                        total += 1
                        if c == field.zero:
                            upper += 1
    return EnumeratedOrders(counted_order=total, counted_borel=upper)


# -- characters of F_{q^2}^x --------------------------------------------------


def is_regular(q, a: int) -> bool:
    """Whether the index-a character of F_{q^2}^x is regular: theta^q != theta."""
    n = as_prime_power(q).q
    modulus = n * n - 1
    return (n * a) % modulus != a % modulus


def restricts_to(q, a: int, nu: int) -> bool:
    """Whether the index-a character restricts to the index-nu character of F_q^x."""
    n = as_prime_power(q).q
    return a % (n - 1) == nu % (n - 1)


def factors_through_norm(q, a: int) -> bool:
    """Whether the index-a character factors through the norm to F_q^x.

    That happens exactly when the character kills the norm kernel, the order
    q+1 subgroup, i.e. when q+1 divides a.
    """
    n = as_prime_power(q).q
    return a % (n + 1) == 0


def count_regular_characters(q, nu: int) -> int:
    """Closed form for the number of regular characters restricting to nu.

    q - 1 of them when nu^((q-1)/2) is trivial, q + 1 otherwise.  With nu the
    index-b character of the cyclic group of order q - 1, that power is
    trivial exactly when b is even.
    """
    n = as_prime_power(q).q
    b = nu % (n - 1)
    return n - 1 if (b * (n - 1) // 2) % (n - 1) == 0 else n + 1


def brute_force_regular_characters(q, nu: int, max_q: int = ENUMERATION_GUARD) -> int:
    """Oracle for count_regular_characters: enumerate all q^2 - 1 indices."""
    pp = as_prime_power(q)
    if pp.q > max_q:
        raise TooLarge(f"q={pp.q} exceeds enumeration guard {max_q}")
    n = pp.q
    return sum(
        1
        for a in range(n * n - 1)
        if is_regular(pp, a) and restricts_to(pp, a, nu)
    )


# -- norm, trace, Hilbert 90 --------------------------------------------------


@dataclass(frozen=True)
class NormTraceFacts:
    norm_surjective: bool
    trace_surjective: bool
    norm_kernel_size: int


def norm_trace_facts(q, max_q: int = ENUMERATION_GUARD) -> NormTraceFacts:
    """Verify by enumeration over an explicit F_{q^2} that the norm x -> x^(q+1)
    surjects onto F_q^x, the trace x -> x + x^q surjects onto F_q, and the norm
    kernel has exactly q + 1 elements."""
    pp = as_prime_power(q)
    if pp.q > max_q:
        raise TooLarge(f"q={pp.q} exceeds enumeration guard {max_q}")
    n = pp.q
    big = _QuadraticExtension(field_model(pp))
    norm_image = set()
    trace_image = set()
    kernel = 0
    for x in big.elements():
        conj = _pow(big, x, n)
        tr = big.add(x, conj)
        assert big.is_in_base(tr), "trace landed outside the base field"
        trace_image.add(tr)
        if x != big.zero:
            nx = big.mul(x, conj)
            assert big.is_in_base(nx), "norm landed outside the base field"
            norm_image.add(nx)
            if nx == big.one:
                kernel += 1
    return NormTraceFacts(
        norm_surjective=len(norm_image) == n - 1,
        trace_surjective=len(trace_image) == n,
        norm_kernel_size=kernel,
    )


def hilbert90_count(q, max_q: int = ENUMERATION_GUARD) -> int:
    """Count the distinct x * conj(x)^-1 over x in F_{q^2}^x (all norm-1 elements)."""
    pp = as_prime_power(q)
    if pp.q > max_q:
        raise TooLarge(f"q={pp.q} exceeds enumeration guard {max_q}")
    big = _QuadraticExtension(field_model(pp))
    quotients = set()
    for x in big.elements():
        if x == big.zero:
            continue
        conj = _pow(big, x, pp.q)
        quotients.add(big.mul(x, _inverse(big, conj)))
    return len(quotients)


# -- representation dimensions ------------------------------------------------


@dataclass(frozen=True)
class FiniteRepDims:
    principal_series_dim: int
    cuspidal_dim: int
    steinberg_dim: int


def finite_rep_dims(q) -> FiniteRepDims:
    """Dimensions over GL(2,F_q): induced-from-Borel q+1, cuspidal q-1, and the
    Steinberg constituent q (the induced trivial splits off a trivial summand)."""
    n = as_prime_power(q).q
    return FiniteRepDims(
        principal_series_dim=n + 1,
        cuspidal_dim=n - 1,
        steinberg_dim=n,
    )

"""Lattices in PSL(2,R): signatures, covolumes, cusp forms, von Neumann dimensions.

A Fuchsian group of the first kind is determined by its signature
(g; m_1, ..., m_l; h): the genus of the quotient surface, the orders of the
inequivalent elliptic points, and the number of inequivalent cusps.  From the
signature alone one can compute, exactly:

* the covolume, via the Gauss-Bonnet formula (with respect to y^-2 dx dy,
  normalized so vol(quotient of the upper half-plane) = vol(quotient of G));
* dim S_k, the dimension of the space of weight-k cusp forms (k even);
* the multiplicity of the weight-(m+1) holomorphic discrete series in the
  cuspidal spectrum, which equals dim S_{m+1};
* the formal dimension m/(4*pi) of that discrete series; and
* the von Neumann dimension of the discrete series as a module over the group
  von Neumann algebra of the lattice, which is the product of the last two.

Weight bookkeeping: the discrete-series parameter m and the cusp-form weight
k are off by one (m = k - 1).  In PSL(2,R) only odd m occurs (-I must act
trivially); a lattice in SL(2,R) not containing -I admits every m >= 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    InvalidSignature,
    NoOccurrence,
    NonHyperbolic,
    NonPositiveWeight,
    OddWeight,
    ParityViolation,
    ScanCapExceeded,
    UnknownGroup,
)
from .exact import PiRational

#: Safety cap for the minimal-weight scan; unreachable for valid signatures
#: (the dimension formula grows without bound in the weight).
DEFAULT_SCAN_CAP = 10**6


class GroupMode(enum.Enum):
    """Whether the lattice lives in PSL(2,R) (default) or in SL(2,R) without -I."""

    PSL2R = "psl"
    SL2R = "sl"


@dataclass(frozen=True)
class FuchsianSignature:
    """Signature (genus; elliptic orders; cusps) of a Fuchsian group of the first kind.

    Validity (each order >= 2, Gauss-Bonnet area strictly positive) is enforced
    here, at construction, so every downstream formula may assume a genuine
    lattice.
    """

    genus: int
    elliptic_orders: tuple = field(default=())
    cusps: int = 0

    def __post_init__(self):
        object.__setattr__(self, "elliptic_orders", tuple(self.elliptic_orders))
        if self.genus < 0:
            raise InvalidSignature(f"genus must be >= 0, got {self.genus}")
        if self.cusps < 0:
            raise InvalidSignature(f"cusp count must be >= 0, got {self.cusps}")
        for m in self.elliptic_orders:
            if not isinstance(m, int) or m < 2:
                raise InvalidSignature(f"elliptic order must be an integer >= 2, got {m}")
        if self.area_factor() <= 0:
            raise NonHyperbolic(
                f"signature {self} has Gauss-Bonnet area 2*pi*{self.area_factor()} <= 0"
            )

    def area_factor(self) -> Fraction:
        """The rational 2g - 2 + sum(1 - 1/m_j) + h; covolume is 2*pi times this."""
        total = Fraction(2 * self.genus - 2 + self.cusps)
        for m in self.elliptic_orders:
            total += 1 - Fraction(1, m)
        return total

    def __str__(self) -> str:
        orders = ",".join(str(m) for m in self.elliptic_orders) or "-"
        return f"{self.genus};{orders};{self.cusps}"


def parse_signature(text: str) -> FuchsianSignature:
    """Parse "g;m1,m2,...;h" ("-" for no elliptic orders), e.g. "0;2,3;1", "0;-;3"."""
    parts = text.strip().split(";")
    if len(parts) != 3:
        raise InvalidSignature(f"signature must have three ';'-separated fields: {text!r}")
    g_text, orders_text, h_text = (p.strip() for p in parts)
    try:
        genus = int(g_text)
        cusps = int(h_text)
        orders = ()
        if orders_text not in ("-", ""):
            orders = tuple(int(m) for m in orders_text.split(","))
    except ValueError as exc:
        raise InvalidSignature(f"malformed signature {text!r}: {exc}") from None
    return FuchsianSignature(genus, orders, cusps)


def covolume(sig: FuchsianSignature) -> PiRational:
    """Covolume of the lattice, 2*pi*(2g - 2 + sum(1 - 1/m_j) + h), always > 0."""
    return PiRational(2 * sig.area_factor(), 1)


def cusp_form_dim(sig: FuchsianSignature, weight: int) -> int:
    """dim S_weight for the lattice with this signature; weight must be even.

    All five cases of the classical dimension formula:

        (m-1)(g-1) + sum floor((m/2)(1 - 1/e_i)) + (m/2 - 1)h   m > 2
        g                                                       m = 2
        1                                                       m = 0, h = 0
        0                                                       m = 0, h > 0
        0                                                       m < 0
    """
    if weight % 2 != 0:
        raise OddWeight(f"cusp-form dimension formula needs an even weight, got {weight}")
    if weight < 0:
        return 0
    if weight == 0:
        return 1 if sig.cusps == 0 else 0
    if weight == 2:
        return sig.genus
    half = weight // 2
    dim = (weight - 1) * (sig.genus - 1) + (half - 1) * sig.cusps
    for e in sig.elliptic_orders:
        dim += (half * (e - 1)) // e
    assert dim >= 0, f"dimension formula went negative on valid signature {sig}"
    return dim


def _check_parameter(m: int, mode: GroupMode) -> None:
    if m < 1:
        raise NonPositiveWeight(f"discrete-series parameter must be >= 1, got {m}")
    if mode is GroupMode.PSL2R and m % 2 == 0:
        raise ParityViolation(
            f"parameter {m} is even; only odd parameters act through PSL(2,R)"
        )


def discrete_series_multiplicity(
    sig: FuchsianSignature, m: int, mode: GroupMode = GroupMode.PSL2R
) -> int:
    """Multiplicity of the parameter-m discrete series in the cuspidal spectrum.

    Equals dim S_{m+1}.  In SL2R mode an even m would need an odd-weight
    cusp-form dimension, which the formula does not give; the parity error
    propagates.
    """
    _check_parameter(m, mode)
    return cusp_form_dim(sig, m + 1)


def formal_dimension_psl(m: int, mode: GroupMode = GroupMode.PSL2R) -> PiRational:
    """Formal dimension m/(4*pi) of the parameter-m discrete series.

    The 4*pi belongs to the Haar normalization compatible with y^-2 dx dy on
    the upper half-plane, the same one the covolume uses.
    """
    _check_parameter(m, mode)
    return PiRational(Fraction(m, 4), -1)


def vn_dimension(
    sig: FuchsianSignature, m: int, mode: GroupMode = GroupMode.PSL2R
) -> Fraction:
    """Von Neumann dimension of the parameter-m discrete series over the lattice algebra.

    Formal dimension times covolume; the pi factors cancel, leaving the exact
    rational (m/2)(2g - 2 + sum(1 - 1/m_j) + h).
    """
    return (formal_dimension_psl(m, mode) * covolume(sig)).as_rational()


def minimal_discrete_series_weight(
    sig: FuchsianSignature,
    mode: GroupMode = GroupMode.PSL2R,
    cap: int = DEFAULT_SCAN_CAP,
) -> int:
    """Smallest parameter m with discrete_series_multiplicity >= 1, by linear scan.

    Only odd m are scanned in either mode: even parameters would need
    odd-weight cusp-form dimensions, which are out of reach of the dimension
    formula.  Termination is guaranteed (the weight->dimension formula grows
    without bound); the cap is a defensive guard only.
    """
    m = 1
    while m <= cap:
        if discrete_series_multiplicity(sig, m, GroupMode.PSL2R) >= 1:
            return m
        m += 2
    raise ScanCapExceeded(
        f"no discrete series found for {sig} with parameter <= {cap}; "
        "raise the cap (VNDIM_SCAN_CAP) if the signature is genuinely this sparse"
    )


def two_lattice_vn_dimension(
    sig1: FuchsianSignature,
    sig2: FuchsianSignature,
    m: int,
    cap: int = DEFAULT_SCAN_CAP,
) -> Fraction:
    """Dimension of the second lattice's algebra acting on the discrete series
    realized inside the automorphic spectrum of the first.

    Defined whenever the parameter-m series occurs for sig1 at all (multiplicity
    >= 1); the value is then vn_dimension(sig2, m), independent of sig1.  When
    the series does not occur, NoOccurrence is raised carrying the smallest
    parameter that does.
    """
    _check_parameter(m, GroupMode.PSL2R)
    if discrete_series_multiplicity(sig1, m) < 1:
        minimal = minimal_discrete_series_weight(sig1, cap=cap)
        raise NoOccurrence(
            f"discrete series with parameter {m} does not occur for {sig1} "
            f"(dim S_{m + 1} = 0); smallest occurring parameter is {minimal}",
            minimal_weight=minimal,
        )
    return vn_dimension(sig2, m)


# -- catalog ----------------------------------------------------------------

_CONGRUENCE_CATALOG = {
    "Gamma0(4)": FuchsianSignature(0, (), 3),
    "Gamma0(4)capGamma(2)": FuchsianSignature(0, (), 4),
    "Gamma(4)": FuchsianSignature(0, (), 6),
}

#: The free-group congruence chain, ambient first; entry = (name, free rank).
FREE_CONGRUENCE_CHAIN = (
    ("Gamma0(4)", 2),
    ("Gamma0(4)capGamma(2)", 3),
    ("Gamma(4)", 5),
)


def catalog(name: str) -> FuchsianSignature:
    """Signatures of the named groups: "H<q>" (q >= 3) and the congruence chain
    "Gamma0(4)", "Gamma0(4)capGamma(2)", "Gamma(4)"."""
    if name in _CONGRUENCE_CATALOG:
        return _CONGRUENCE_CATALOG[name]
    if name.startswith("H"):
        try:
            q = int(name[1:])
        except ValueError:
            raise UnknownGroup(f"unknown group {name!r}") from None
        if q < 3:
            raise UnknownGroup(f"Hecke groups need q >= 3, got {name!r}")
        return FuchsianSignature(0, (2, q), 1)
    raise UnknownGroup(f"unknown group {name!r}")

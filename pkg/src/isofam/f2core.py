"""Based symplectic F2-vector space with the adjacent-index pairing.

The ambient space V has dimension 2d with distinguished basis e_1, ..., e_{2d}
and symplectic form (e_i, e_j) = 1 exactly when |i - j| = 1.  Vectors are
stored as int bitmasks: bit (i-1) holds the coefficient of e_i.  The quotient
V_i = perp(e_i) / <e_i> is always re-expressed in the standard model of
dimension 2(d-1) via its induced basis, so recursion only ever sees one space
type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class DimensionMismatch(ValueError):
    """Two vectors from spaces of different dimension were combined."""


class InvalidInterval(ValueError):
    """Interval is out of range or has even cardinality."""


class NotPerpendicular(ValueError):
    """Vector is not perpendicular to the quotient pivot."""


@dataclass(frozen=True, order=True)
class Vec:
    """Element of V = F2^{2d}; bit (i-1) of ``bits`` is the e_i coefficient."""

    d: int
    bits: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError(f"d must be >= 0, got {self.d}")
        if not 0 <= self.bits < (1 << (2 * self.d)):
            raise ValueError(f"bits 0x{self.bits:x} out of range for d={self.d}")

    def __xor__(self, other: "Vec") -> "Vec":
        if self.d != other.d:
            raise DimensionMismatch(f"d={self.d} vs d={other.d}")
        return Vec(self.d, self.bits ^ other.bits)

    __add__ = __xor__

    def coeff(self, i: int) -> int:
        """Coefficient of e_i, i in [1, 2d]."""
        if not 1 <= i <= 2 * self.d:
            raise IndexError(f"index {i} outside [1, {2 * self.d}]")
        return (self.bits >> (i - 1)) & 1

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> list[int]:
        return [i for i in range(1, 2 * self.d + 1) if (self.bits >> (i - 1)) & 1]

    def to_bitstring(self) -> str:
        """Serialize as a length-2d string; position i-1 is the e_i coefficient."""
        return format(self.bits, f"0{2 * self.d}b")[::-1] if self.d else ""

    @classmethod
    def from_bitstring(cls, s: str) -> "Vec":
        if len(s) % 2:
            raise ValueError("bitstring length must be even")
        return cls(len(s) // 2, int(s[::-1], 2) if s else 0)

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        return "+".join(f"e{i}" for i in self.support())


def zero(d: int) -> Vec:
    return Vec(d, 0)


def basis_vector(i: int, d: int) -> Vec:
    """The basis vector e_i."""
    if not 1 <= i <= 2 * d:
        raise IndexError(f"basis index {i} outside [1, {2 * d}]")
    return Vec(d, 1 << (i - 1))


def pairing(x: Vec, y: Vec) -> int:
    """Symplectic pairing: sum over |i-j| = 1 of x_i y_j, mod 2."""
    if x.d != y.d:
        raise DimensionMismatch(f"d={x.d} vs d={y.d}")
    a = ((x.bits >> 1) & y.bits).bit_count()
    b = ((y.bits >> 1) & x.bits).bit_count()
    return (a + b) & 1


@dataclass(frozen=True, order=True)
class Interval:
    """Integer interval [a, b] of odd cardinality, 1 <= a <= b."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not 1 <= self.a <= self.b:
            raise InvalidInterval(f"need 1 <= a <= b, got [{self.a},{self.b}]")
        if (self.b - self.a + 1) % 2 == 0:
            raise InvalidInterval(f"[{self.a},{self.b}] has even cardinality")

    def __contains__(self, j: int) -> bool:
        return self.a <= j <= self.b

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"

    @classmethod
    def parse(cls, s: str) -> "Interval":
        body = s.strip().lstrip("[").rstrip("]")
        a, b = (int(t) for t in body.split(","))
        return cls(a, b)


def intervals(d: int) -> list[Interval]:
    """All odd-cardinality intervals inside [1, 2d], sorted by (a, b)."""
    return [
        Interval(a, b)
        for a in range(1, 2 * d + 1)
        for b in range(a, 2 * d + 1, 2)
    ]


def interval_vector(iv: Interval, d: int) -> Vec:
    """The sum of e_j over j in the interval."""
    if iv.b > 2 * d:
        raise InvalidInterval(f"{iv} does not fit inside [1, {2 * d}]")
    bits = ((1 << iv.b) - 1) ^ ((1 << (iv.a - 1)) - 1)
    return Vec(d, bits)


def _interval_of(v: Vec) -> Interval | None:
    """Return the interval I with v = e_I, or None if v is not of that form."""
    if v.is_zero:
        return None
    lo = (v.bits & -v.bits).bit_length()
    hi = v.bits.bit_length()
    if v.bits == ((1 << hi) - 1) ^ ((1 << (lo - 1)) - 1) and (hi - lo) % 2 == 0:
        return Interval(lo, hi)
    return None


@dataclass(frozen=True)
class QuotientModel:
    """The quotient perp(e_i) / <e_i> rewritten as the standard space of dim 2(d-1).

    The induced basis is e^i_k = pi_i(e_k) for k <= i-2, pi_i(e_{k+2}) for
    k >= i, and pi_i(e_{i-1} + e_{i+1}) for k = i-1 (when 1 < i < 2d).
    """

    parent_d: int
    pivot: int

    def __post_init__(self) -> None:
        if self.parent_d < 1:
            raise ValueError("quotient needs d >= 1")
        if not 1 <= self.pivot <= 2 * self.parent_d:
            raise IndexError(f"pivot {self.pivot} outside [1, {2 * self.parent_d}]")

    @property
    def child_d(self) -> int:
        return self.parent_d - 1

    def project(self, x: Vec) -> Vec:
        """Image of x under pi_i in induced-basis coordinates."""
        i, d = self.pivot, self.parent_d
        if x.d != d:
            raise DimensionMismatch(f"d={x.d} vs d={d}")
        e_i = basis_vector(i, d)
        if pairing(x, e_i):
            raise NotPerpendicular(f"{x!r} not perpendicular to e{i}")
        bits = x.bits
        if i == 1:
            child = bits >> 2
        elif i == 2 * d:
            child = bits & ((1 << (2 * d - 2)) - 1)
        else:
            low = bits & ((1 << (i - 2)) - 1)
            mid = (bits >> (i - 2)) & 1  # x_{i-1} = x_{i+1} by perpendicularity
            high = bits >> (i + 1)
            child = low | (mid << (i - 2)) | (high << (i - 1))
        return Vec(d - 1, child)

    def section(self, v: Vec) -> Vec:
        """Canonical preimage of v under pi_i (the one with e_i coefficient 0)."""
        i, d = self.pivot, self.parent_d
        if v.d != d - 1:
            raise DimensionMismatch(f"d={v.d} vs child d={d - 1}")
        bits = v.bits
        if i == 1:
            parent = bits << 2
        elif i == 2 * d:
            parent = bits
        else:
            low = bits & ((1 << (i - 2)) - 1)
            mid = (bits >> (i - 2)) & 1
            high = bits >> (i - 1)
            parent = low | (mid << (i - 2)) | (mid << i) | (high << (i + 1))
        return Vec(d, parent)

    def fiber(self, v: Vec) -> tuple[Vec, Vec]:
        """The two preimages of v under pi_i."""
        s = self.section(v)
        return s, s ^ basis_vector(self.pivot, self.parent_d)

    def induced_basis_rep(self, k: int) -> Vec:
        """Representative in the parent space of the induced basis vector e^i_k."""
        i, d = self.pivot, self.parent_d
        if not 1 <= k <= 2 * d - 2:
            raise IndexError(f"induced index {k} outside [1, {2 * d - 2}]")
        if k <= i - 2:
            return basis_vector(k, d)
        if k >= i:
            return basis_vector(k + 2, d)
        return basis_vector(i - 1, d) ^ basis_vector(i + 1, d)

    def project_interval(self, iv: Interval) -> Vec:
        """Image of the interval vector e_[a,b], as a child-space vector.

        Requires (e_[a,b], e_i) = 0, i.e. a < i < b, i < a-1, i > b+1, or
        a = b = i.  The result is again an interval vector (or zero when
        a = b = i).
        """
        i, d = self.pivot, self.parent_d
        a, b = iv.a, iv.b
        if b > 2 * d:
            raise InvalidInterval(f"{iv} does not fit inside [1, {2 * d}]")
        if a < i < b:
            return interval_vector(Interval(a, b - 2), d - 1)
        if i < a - 1:
            return interval_vector(Interval(a - 2, b - 2), d - 1)
        if i > b + 1:
            return interval_vector(Interval(a, b), d - 1)
        if a == b == i:
            return zero(d - 1)
        raise NotPerpendicular(f"e_{iv} not perpendicular to e{i}")

    def lift_interval(self, iv: Interval) -> tuple[Vec, Vec]:
        """The two-element fiber of pi_i over the child interval vector e^i_[a',b'].

        The first returned vector is itself an interval vector of the parent.
        """
        i, d = self.pivot, self.parent_d
        a, b = iv.a, iv.b
        if b > 2 * d - 2:
            raise InvalidInterval(f"{iv} does not fit inside [1, {2 * d - 2}]")
        e_i = basis_vector(i, d)
        if a < i < b + 2:
            base = interval_vector(Interval(a, b + 2), d)
        elif i <= a:
            base = interval_vector(Interval(a + 2, b + 2), d)
        else:  # i >= b + 2
            base = interval_vector(Interval(a, b), d)
        return base, base ^ e_i


def all_vectors(d: int) -> Iterator[Vec]:
    """All 2^{2d} elements of V, in increasing bitmask order."""
    for bits in range(1 << (2 * d)):
        yield Vec(d, bits)

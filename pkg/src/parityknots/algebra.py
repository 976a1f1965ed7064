"""Finite-type quotients of the signed group's rational group algebra.

The square of a kind-1 shift letter at level i is a central element z_i.
Writing t_i = z_i - 1, the degree-(k+1) products of the t_i are killed in
the k-th quotient, so every central power z_i^q collapses onto the
truncated binomial series sum_j C(q, j) t_i^j with j <= k, where C(q, j)
is the generalized binomial coefficient (q may be negative).

An element of the quotient is represented as a finite sum of flat-group
lattice points with TruncatedPoly coefficients: exact rationals keyed by
exponent vectors of total degree <= k.  Only the linear structure is
implemented (sums, scalar multiples, zero tests); that is all the
finite-type machinery needs.  Polynomial products exist because the
binomial factors for the different levels must be multiplied together.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping


class ParameterMismatch(ValueError):
    """Mixed m or k between algebra values."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"coefficients must be exact rationals, got {type(x).__name__}")


@dataclass(frozen=True)
class TruncatedPoly:
    """A rational polynomial in t_0..t_{m-1}, truncated past total degree k.

    coeffs maps exponent vectors (tuples of length m) to nonzero
    Fractions; zero is the empty map.  Instances are immutable; all
    arithmetic returns new values and silently drops monomials whose
    total degree exceeds k.
    """

    m: int
    k: int
    coeffs: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.coeffs.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.m or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for m={self.m}")
            if sum(exps) > self.k:
                continue
            coeff = _as_fraction(coeff)
            if coeff != 0:
                clean[exps] = coeff
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, m: int, k: int) -> "TruncatedPoly":
        return cls(m, k, {})

    @classmethod
    def one(cls, m: int, k: int) -> "TruncatedPoly":
        return cls(m, k, {(0,) * m: Fraction(1)})

    def _match(self, other: "TruncatedPoly") -> None:
        if self.m != other.m or self.k != other.k:
            raise ParameterMismatch(
                f"cannot combine (m={self.m}, k={self.k}) with (m={other.m}, k={other.k})"
            )

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._match(other)
        out = dict(self.coeffs)
        for exps, coeff in other.coeffs.items():
            out[exps] = out.get(exps, Fraction(0)) + coeff
        return TruncatedPoly(self.m, self.k, out)

    def __neg__(self) -> "TruncatedPoly":
        return self.scale(-1)

    def __sub__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        return self + (-other)

    def scale(self, scalar) -> "TruncatedPoly":
        s = _as_fraction(scalar)
        return TruncatedPoly(self.m, self.k, {e: s * c for e, c in self.coeffs.items()})

    def __mul__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._match(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if sum(e) > self.k:
                    continue
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return TruncatedPoly(self.m, self.k, out)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for exps in sorted(self.coeffs, key=lambda e: (sum(e), e)):
            coeff = self.coeffs[exps]
            mono = "*".join(
                f"t{i}" if p == 1 else f"t{i}^{p}" for i, p in enumerate(exps) if p
            )
            if not mono:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(mono)
            elif coeff == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coeff}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def binom_power(q: int, i: int, m: int, k: int) -> TruncatedPoly:
    """The image of z_i^q: sum of C(q, j) t_i^j over j <= k.

    C(q, j) is the falling-factorial binomial, defined for negative q as
    well; binom_power(q) * binom_power(-q) is 1 in the quotient.
    """
    if not 0 <= i < m:
        raise ValueError(f"level index {i} out of range for m={m}")
    coeffs: dict[tuple[int, ...], Fraction] = {}
    c = Fraction(1)
    for j in range(k + 1):
        if j > 0:
            c = c * Fraction(q - j + 1, j)
        if c != 0:
            exps = tuple(j if idx == i else 0 for idx in range(m))
            coeffs[exps] = c
    return TruncatedPoly(m, k, coeffs)


@dataclass(frozen=True)
class AlgebraElement:
    """A finite rational combination of flat lattice points.

    terms maps flat elements (coordinate tuples, length m+1) to nonzero
    TruncatedPoly coefficients.
    """

    m: int
    k: int
    terms: Mapping[tuple[int, ...], TruncatedPoly] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[tuple[int, ...], TruncatedPoly] = {}
        for point, poly in self.terms.items():
            point = tuple(int(x) for x in point)
            if len(point) != self.m + 1:
                raise ValueError(f"flat point {point} needs {self.m + 1} coordinates")
            if poly.m != self.m or poly.k != self.k:
                raise ParameterMismatch("coefficient parameters disagree with element")
            if not poly.is_zero():
                clean[point] = poly
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, m: int, k: int) -> "AlgebraElement":
        return cls(m, k, {})

    def is_zero(self) -> bool:
        return not self.terms

    def _match(self, other: "AlgebraElement") -> None:
        if self.m != other.m or self.k != other.k:
            raise ParameterMismatch(
                f"cannot combine (m={self.m}, k={self.k}) with (m={other.m}, k={other.k})"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._match(other)
        out = dict(self.terms)
        zero = TruncatedPoly.zero(self.m, self.k)
        for point, poly in other.terms.items():
            out[point] = out.get(point, zero) + poly
        return AlgebraElement(self.m, self.k, out)

    def __neg__(self) -> "AlgebraElement":
        return self.scale(-1)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, scalar) -> "AlgebraElement":
        return AlgebraElement(
            self.m, self.k, {p: poly.scale(scalar) for p, poly in self.terms.items()}
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({self.terms[p]}) @ {p}" for p in sorted(self.terms)
        )


def project(e: tuple, k: int) -> AlgebraElement:
    """Image of a signed-group element in the k-th quotient.

    Each level pair (y_{2i+1}, y_{2i+2}) splits as q_i = y_{2i+2} central
    powers (right multiplication by z_i adds (+1, +1) to the pair from
    any state) times a residue moving only the first slot by
    d_i = y_{2i+1} - y_{2i+2}; the residue maps onto the flat point with
    level coordinates d_i and the same bit.
    """
    if len(e) % 2 == 0:
        raise ValueError("signed elements have an odd number of coordinates")
    m = (len(e) - 1) // 2
    point = []
    poly = TruncatedPoly.one(m, k)
    for i in range(m):
        q = e[2 * i + 1]
        point.append(e[2 * i] - q)
        poly = poly * binom_power(q, i, m, k)
    point.append(e[2 * m])
    return AlgebraElement(m, k, {tuple(point): poly})


# --- JSON ----------------------------------------------------------------


def poly_to_json(poly: TruncatedPoly) -> dict:
    """{"[1,0]": "3/2", ...}: exponent vectors against rational strings."""
    out = {}
    for exps in sorted(poly.coeffs, key=lambda e: (sum(e), e)):
        key = "[" + ",".join(str(x) for x in exps) + "]"
        out[key] = str(poly.coeffs[exps])
    return out


def algebra_to_json(elem: AlgebraElement) -> list:
    return [
        {"point": list(point), "poly": poly_to_json(elem.terms[point])}
        for point in sorted(elem.terms)
    ]

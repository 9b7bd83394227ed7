"""Mod-2 cohomology rings of the four base spaces.

Each ring is a table of monomials in a canonical order (by degree) with a
hand-coded product rule. Classes are F2 coefficient vectors over that basis,
so terms above the base dimension never appear.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from swobstruct.errors import BadDimensionsError, RingMismatchError

Monomial = Hashable


class RingDescriptor(ABC):
    """Abstract interface for a finite-rank mod-2 cohomology ring."""

    @property
    @abstractmethod
    def kind(self) -> str:
        """Short ring kind, e.g. ``"RP"``."""
        pass

    @property
    @abstractmethod
    def dimension(self) -> int:
        """Dimension of the base space, the top degree of the ring."""
        pass

    @abstractmethod
    def monomials(self) -> List[Monomial]:
        """All basis monomials, unordered."""
        pass

    @abstractmethod
    def degree(self, m: Monomial) -> int:
        pass

    @abstractmethod
    def product(self, a: Monomial, b: Monomial) -> Optional[Monomial]:
        """Product of two monomials, None when it vanishes."""
        pass

    @abstractmethod
    def name(self, m: Monomial) -> str:
        """Printed form, ``"1"`` for the unit."""
        pass

    @property
    @abstractmethod
    def unit(self) -> Monomial:
        pass

    @property
    @abstractmethod
    def top(self) -> Monomial:
        """The unique monomial of top degree."""
        pass

    @abstractmethod
    def describe(self) -> str:
        """Name of the base space, e.g. ``"RP^3"``."""
        pass

    @cached_property
    def basis(self) -> Tuple[Monomial, ...]:
        """Canonical order: by degree, ties by printed name."""
        return tuple(sorted(self.monomials(), key=lambda m: (self.degree(m), self.name(m))))

    @cached_property
    def index(self) -> Dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.basis)}

    @property
    def size(self) -> int:
        return len(self.basis)

    def element(self, monomials: Sequence[Monomial]) -> "CohomClass":
        """Sum of the given monomials."""
        coeffs = np.zeros(self.size, dtype=np.uint8)
        for m in monomials:
            coeffs[self.index[m]] ^= 1
        return CohomClass(self, coeffs)

    def one(self) -> "CohomClass":
        return self.element([self.unit])

    def zero(self) -> "CohomClass":
        return self.element([])


@dataclass(frozen=True, eq=True)
class RealProjective(RingDescriptor):
    """H*(RP^d; F2) = F2[x]/(x^(d+1)); monomials are exponents."""

    d: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise BadDimensionsError(f"RP^d needs d >= 0, got {self.d}", "ring")

    @property
    def kind(self) -> str:
        return "RP"

    @property
    def dimension(self) -> int:
        return self.d

    def monomials(self) -> List[Monomial]:
        return list(range(self.d + 1))

    def degree(self, m: Monomial) -> int:
        return int(m)  # type: ignore[call-overload]

    def product(self, a: Monomial, b: Monomial) -> Optional[Monomial]:
        e = a + b  # type: ignore[operator]
        return e if e <= self.d else None

    def name(self, m: Monomial) -> str:
        return _power("x", int(m)) or "1"  # type: ignore[call-overload]

    @property
    def unit(self) -> Monomial:
        return 0

    @property
    def top(self) -> Monomial:
        return self.d

    def x(self) -> "CohomClass":
        return self.element([1]) if self.d >= 1 else self.zero()

    def describe(self) -> str:
        return f"RP^{self.d}"


@dataclass(frozen=True, eq=True)
class LensSpace(RingDescriptor):
    """H*(L^(2u+1)(k); F2) for even k = 2m.

    Monomials are ``(a, i)`` for ``alpha^a beta^i`` with ``a`` in {0, 1} and
    ``i <= u``. ``alpha^2 = beta`` when m is odd and 0 when m is even.
    """

    u: int
    k: int

    def __post_init__(self) -> None:
        if self.u < 0:
            raise BadDimensionsError(f"Lens space needs u >= 0, got {self.u}", "ring")
        if self.k < 2 or self.k % 2:
            raise BadDimensionsError(f"Lens space ring needs even k, got {self.k}", "ring")

    @property
    def kind(self) -> str:
        return "Lens"

    @property
    def dimension(self) -> int:
        return 2 * self.u + 1

    @property
    def alpha_squared_is_beta(self) -> bool:
        return (self.k // 2) % 2 == 1

    def monomials(self) -> List[Monomial]:
        return [(a, i) for i in range(self.u + 1) for a in (0, 1)]

    def degree(self, m: Monomial) -> int:
        a, i = m  # type: ignore[misc]
        return a + 2 * i

    def product(self, a: Monomial, b: Monomial) -> Optional[Monomial]:
        (a1, i1), (a2, i2) = a, b  # type: ignore[misc]
        alphas, betas = a1 + a2, i1 + i2
        if alphas == 2:
            if not self.alpha_squared_is_beta:
                return None
            alphas, betas = 0, betas + 1
        return (alphas, betas) if betas <= self.u else None

    def name(self, m: Monomial) -> str:
        a, i = m  # type: ignore[misc]
        parts = [p for p in ("alpha" if a else "", _power("beta", i)) if p]
        return "*".join(parts) or "1"

    @property
    def unit(self) -> Monomial:
        return (0, 0)

    @property
    def top(self) -> Monomial:
        return (1, self.u)

    def alpha(self) -> "CohomClass":
        return self.element([(1, 0)])

    def beta(self) -> "CohomClass":
        return self.element([(0, 1)]) if self.u >= 1 else self.zero()

    def describe(self) -> str:
        return f"L^{self.dimension}({self.k})"


@dataclass(frozen=True, eq=True)
class Torus(RingDescriptor):
    """H*(T^d; F2), the exterior algebra on x1..xd; monomials are bitmasks."""

    d: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise BadDimensionsError(f"T^d needs d >= 0, got {self.d}", "ring")

    @property
    def kind(self) -> str:
        return "Torus"

    @property
    def dimension(self) -> int:
        return self.d

    def monomials(self) -> List[Monomial]:
        return list(range(1 << self.d))

    def degree(self, m: Monomial) -> int:
        return bin(m).count("1")  # type: ignore[call-overload]

    def product(self, a: Monomial, b: Monomial) -> Optional[Monomial]:
        if a & b:  # type: ignore[operator]
            return None
        return a | b  # type: ignore[operator]

    def name(self, m: Monomial) -> str:
        names = [f"x{i + 1}" for i in range(self.d) if (m >> i) & 1]  # type: ignore[operator]
        return "*".join(names) or "1"

    @cached_property
    def basis(self) -> Tuple[Monomial, ...]:
        return tuple(
            sorted(
                self.monomials(),
                key=lambda m: (self.degree(m), [i for i in range(self.d) if (m >> i) & 1]),
            )
        )

    @property
    def unit(self) -> Monomial:
        return 0

    @property
    def top(self) -> Monomial:
        return (1 << self.d) - 1

    def x(self, i: int) -> "CohomClass":
        """Generator ``x_i`` (1-based)."""
        return self.element([1 << (i - 1)])

    def describe(self) -> str:
        return f"T^{self.d}"


@dataclass(frozen=True, eq=True)
class BiProjective(RingDescriptor):
    """H*(RP^d1 x RP^d2; F2) = F2[x, y]/(x^(d1+1), y^(d2+1))."""

    d1: int
    d2: int

    def __post_init__(self) -> None:
        if self.d1 < 0 or self.d2 < 0:
            raise BadDimensionsError(
                f"RP^d1 x RP^d2 needs d1, d2 >= 0, got ({self.d1}, {self.d2})", "ring"
            )

    @property
    def kind(self) -> str:
        return "BiProj"

    @property
    def dimension(self) -> int:
        return self.d1 + self.d2

    def monomials(self) -> List[Monomial]:
        return [(i, j) for i in range(self.d1 + 1) for j in range(self.d2 + 1)]

    def degree(self, m: Monomial) -> int:
        return m[0] + m[1]  # type: ignore[index]

    def product(self, a: Monomial, b: Monomial) -> Optional[Monomial]:
        i, j = a[0] + b[0], a[1] + b[1]  # type: ignore[index]
        return (i, j) if i <= self.d1 and j <= self.d2 else None

    def name(self, m: Monomial) -> str:
        i, j = m  # type: ignore[misc]
        return "*".join(p for p in (_power("x", i), _power("y", j)) if p) or "1"

    @cached_property
    def basis(self) -> Tuple[Monomial, ...]:
        return tuple(sorted(self.monomials(), key=lambda m: (m[0] + m[1], -m[0])))  # type: ignore[index]

    @property
    def unit(self) -> Monomial:
        return (0, 0)

    @property
    def top(self) -> Monomial:
        return (self.d1, self.d2)

    def x(self) -> "CohomClass":
        return self.element([(1, 0)]) if self.d1 >= 1 else self.zero()

    def y(self) -> "CohomClass":
        return self.element([(0, 1)]) if self.d2 >= 1 else self.zero()

    def describe(self) -> str:
        return f"RP^{self.d1} x RP^{self.d2}"


def _power(symbol: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    return symbol if exponent == 1 else f"{symbol}^{exponent}"


@dataclass(frozen=True, eq=False)
class CohomClass:
    """Element of a ring, an F2 coefficient vector over ``ring.basis``."""

    ring: RingDescriptor
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        """Validate coefficient vector."""
        if self.coeffs.shape != (self.ring.size,):
            raise ValueError(
                f"Coefficient vector has shape {self.coeffs.shape}, ring has {self.ring.size} monomials"
            )
        object.__setattr__(self, "coeffs", (self.coeffs & 1).astype(np.uint8))
        self.coeffs.flags.writeable = False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohomClass):
            return NotImplemented
        return self.ring == other.ring and bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs.tobytes()))

    def _check_ring(self, other: "CohomClass", operation: str) -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"Cannot combine classes of {self.ring.describe()} and {other.ring.describe()}",
                operation,
            )

    def __add__(self, other: "CohomClass") -> "CohomClass":
        self._check_ring(other, "add")
        return CohomClass(self.ring, self.coeffs ^ other.coeffs)

    def __mul__(self, other: "CohomClass") -> "CohomClass":
        return multiply(self, other)

    def __pow__(self, n: int) -> "CohomClass":
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @property
    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def terms(self) -> List[str]:
        """Names of the monomials with coefficient 1, in basis order."""
        return [self.ring.name(m) for m, c in zip(self.ring.basis, self.coeffs) if c]

    def component(self, degree: int) -> "CohomClass":
        """Homogeneous part of the given degree."""
        mask = np.array([self.ring.degree(m) == degree for m in self.ring.basis], dtype=np.uint8)
        return CohomClass(self.ring, self.coeffs & mask)

    def __str__(self) -> str:
        return " + ".join(self.terms()) or "0"


def multiply(a: CohomClass, b: CohomClass) -> CohomClass:
    """Product in the common ring.

    Raises:
        RingMismatchError: If the classes live in different rings
    """
    a._check_ring(b, "multiply")
    ring = a.ring
    result = np.zeros(ring.size, dtype=np.uint8)
    left = [ring.basis[i] for i in np.flatnonzero(a.coeffs)]
    right = [ring.basis[i] for i in np.flatnonzero(b.coeffs)]
    for ma in left:
        for mb in right:
            m = ring.product(ma, mb)
            if m is not None:
                result[ring.index[m]] ^= 1
    return CohomClass(ring, result)


def top_component(c: CohomClass) -> int:
    """Coefficient of the top-degree monomial."""
    return int(c.coeffs[c.ring.index[c.ring.top]])

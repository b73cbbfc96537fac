"""Dense polynomials over a finite field.

Coefficients are stored lowest degree first (index l holds the coefficient
of x^l) with no trailing zeros; the zero polynomial has an empty coefficient
tuple and degree NEG_DEGREE, a sentinel strictly below every integer so that
every bound of the form `deg r < limit` is automatically satisfied by r = 0.

Also provides irreducibility testing by exhaustive trial division and the
closed-form count of monic irreducible polynomials.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import (
    BothZero,
    ConstantInput,
    DivisionByZeroPoly,
    SpecMismatch,
)
from .field import Field

NEG_DEGREE = float("-inf")  # degree of the zero polynomial


def _strip(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Immutable dense polynomial over a `Field`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", _strip([field.check(int(c)) for c in coeffs]))

    @classmethod
    def _raw(cls, field: Field, coeffs: tuple[int, ...]) -> "Poly":
        """Internal constructor for already-normalized coefficients."""
        p = object.__new__(cls)
        object.__setattr__(p, "field", field)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls._raw(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls._raw(field, (1,))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls._raw(field, (0, 1))

    @classmethod
    def monomial(cls, field: Field, coeff: int, degree: int) -> "Poly":
        if coeff == 0:
            return cls.zero(field)
        return cls._raw(field, (0,) * degree + (field.check(coeff),))

    @classmethod
    def from_int(cls, field: Field, code: int) -> "Poly":
        """Decode a base-q digit string, lowest digit = constant term."""
        q = field.q
        coeffs = []
        while code:
            coeffs.append(code % q)
            code //= q
        return cls._raw(field, tuple(coeffs))

    def to_int(self) -> int:
        q = self.field.q
        out = 0
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    # -- structure ----------------------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Poly)
                and self.field == other.field and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def serialize(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def __str__(self) -> str:
        return self.serialize()

    def __repr__(self) -> str:
        return f"Poly({self.field!r}, {list(self.coeffs)})"

    # -- arithmetic -------------------------------------------------------------------

    def _check_field(self, other: "Poly") -> None:
        if self.field != other.field:
            raise SpecMismatch(f"operands over {self.field!r} and {other.field!r}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly._raw(self.field, _strip(out))

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        sub = self.field.sub
        n = max(len(self.coeffs), len(other.coeffs))
        out = [sub(self.coeff(i), other.coeff(i)) for i in range(n)]
        return Poly._raw(self.field, _strip(out))

    def __neg__(self) -> "Poly":
        neg = self.field.neg
        return Poly._raw(self.field, tuple(neg(c) for c in self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.field)
        mul, add = self.field.mul, self.field.add
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] = add(out[i + j], mul(ca, cb))
        return Poly._raw(self.field, _strip(out))

    def scale(self, c: int) -> "Poly":
        if c == 0:
            return Poly.zero(self.field)
        if c == 1:
            return self
        mul = self.field.mul
        return Poly._raw(self.field, tuple(mul(c, x) for x in self.coeffs))

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k (k >= 0)."""
        if self.is_zero or k == 0:
            return self
        return Poly._raw(self.field, (0,) * k + self.coeffs)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check_field(other)
        if other.is_zero:
            raise DivisionByZeroPoly("polynomial division by zero")
        db = len(other.coeffs) - 1
        rem = list(self.coeffs)
        if len(rem) - 1 < db:
            return Poly.zero(self.field), self
        field = self.field
        mul, sub = field.mul, field.sub
        lead_inv = field.inv(other.coeffs[-1])
        bc = other.coeffs
        quot = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                f = mul(c, lead_inv)
                quot[i - db] = f
                rem[i] = 0
                base = i - db
                for j in range(db):
                    if bc[j]:
                        rem[base + j] = sub(rem[base + j], mul(f, bc[j]))
        return Poly._raw(field, _strip(quot)), Poly._raw(field, _strip(rem))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        """Scale by the inverse of the leading coefficient (zero stays zero)."""
        if self.is_zero or self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def evaluate(self, beta: int) -> int:
        """Horner evaluation at a field element."""
        field = self.field
        field.check(beta)
        acc = 0
        mul, add = field.mul, field.add
        for c in reversed(self.coeffs):
            acc = add(mul(acc, beta), c)
        return acc


# -- gcd machinery ------------------------------------------------------------------


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    a._check_field(b)
    if a.is_zero and b.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, u, v) with u*a + v*b = g and g the monic gcd."""
    a._check_field(b)
    if a.is_zero and b.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    field = a.field
    r0, r1 = a, b
    u0, u1 = Poly.one(field), Poly.zero(field)
    v0, v1 = Poly.zero(field), Poly.one(field)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.coeffs[-1] != 1:
        c = field.inv(r0.coeffs[-1])
        r0, u0, v0 = r0.scale(c), u0.scale(c), v0.scale(c)
    return r0, u0, v0


def poly_mod_inverse(a: Poly, modulus: Poly) -> Poly:
    """Inverse of a in the residue ring modulo `modulus` (must be coprime)."""
    g, u, _ = poly_xgcd(a % modulus, modulus)
    if g.degree != 0:
        raise ValueError(f"{a} is not invertible modulo {modulus}")
    return u % modulus


# -- irreducibility ----------------------------------------------------------------


def monic_polys(field: Field, degree: int) -> Iterator[Poly]:
    """All monic polynomials of the exact degree, in lexicographic code order."""
    if degree == 0:
        yield Poly.one(field)
        return
    q = field.q
    for code in range(q ** degree):
        low = Poly.from_int(field, code).coeffs
        yield Poly._raw(field, low + (0,) * (degree - len(low)) + (1,))


def is_irreducible(a: Poly) -> bool:
    """Exhaustive trial-division irreducibility test.

    Checks roots over the whole field, then divisors of each degree up to
    deg(a)/2.  Cost grows as q^(deg/2); fine at the field sizes this library
    supports.
    """
    d = a.degree
    if a.is_zero or d < 1:
        raise ConstantInput("irreducibility requires degree >= 1")
    if d == 1:
        return True
    for beta in a.field.elements():
        if a.evaluate(beta) == 0:
            return False
    for e in range(2, d // 2 + 1):
        for cand in monic_polys(a.field, e):
            if (a % cand).is_zero:
                return False
    return True


_IRREDUCIBLE_CACHE: dict[tuple[Field, int], tuple[Poly, ...]] = {}


def irreducible_polys(field: Field, degree: int) -> tuple[Poly, ...]:
    """All monic irreducible polynomials of the given degree, by sieve.

    Built inductively: a candidate of degree d survives if it has no root
    and no irreducible divisor of degree 2..d/2.  Results are cached.
    """
    key = (field, degree)
    cached = _IRREDUCIBLE_CACHE.get(key)
    if cached is not None:
        return cached
    if degree == 1:
        out = tuple(monic_polys(field, 1))
    else:
        divisors = [g for e in range(2, degree // 2 + 1) for g in irreducible_polys(field, e)]
        out = tuple(
            f for f in monic_polys(field, degree)
            if all(f.evaluate(beta) != 0 for beta in field.elements())
            and all(not (f % g).is_zero for g in divisors)
        )
    _IRREDUCIBLE_CACHE[key] = out
    return out


def sieve_count_irreducible(field: Field, degree: int) -> int:
    """Irreducible count by exhaustive sieve (test oracle for the closed form)."""
    return len(irreducible_polys(field, degree))


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def count_irreducible(q: int, degree: int) -> int:
    """Number of monic irreducible polynomials of the degree over GF(q).

    Closed form: (1/i) * sum over divisors d of i of mobius(d) * q^(i/d).
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    total = 0
    for d in range(1, degree + 1):
        if degree % d == 0:
            total += _mobius(d) * q ** (degree // d)
    assert total % degree == 0
    return total // degree

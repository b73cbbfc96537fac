"""Arithmetic in GF(p) and GF(p^m).

Field elements are plain ints in [0, p^m).  For m > 1 the int is the base-p
encoding of the polynomial-basis coefficient vector (c_0, ..., c_{m-1}),
i.e. sum(c_i * p^i); this fixes serialization exactly.  A `Field` object
carries the arithmetic; it never wraps the elements themselves, so the zero
and one of every field are the ints 0 and 1.

Supported field sizes are q = p^m <= 2**16.  Extension-field multiplication
uses log/antilog tables built lazily on first use; prime fields reduce mod p
directly.
"""

from __future__ import annotations

from .errors import DegreeMismatch, NonPrimeCharacteristic, ReducibleModulus, ZeroInverse

MAX_FIELD_SIZE = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """GF(p^m), validated at construction.

    For m > 1 a reduction polynomial must be given as a coefficient list
    over GF(p), lowest degree first, length m+1, monic, irreducible.
    """

    def __init__(self, p: int, m: int = 1, reduction: tuple[int, ...] | list[int] | None = None):
        if p < 2 or not _is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if m < 1:
            raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
        if m == 1:
            if reduction is not None:
                raise DegreeMismatch("reduction polynomial only applies to extension fields")
        else:
            if reduction is None:
                raise DegreeMismatch("extension field requires a reduction polynomial")
            reduction = tuple(int(c) % p for c in reduction)
            if len(reduction) != m + 1 or reduction[-1] != 1:
                raise DegreeMismatch(
                    f"reduction polynomial must be monic of degree {m}")
        q = p ** m
        if q > MAX_FIELD_SIZE:
            raise DegreeMismatch(f"field size {q} exceeds supported limit {MAX_FIELD_SIZE}")

        self.p = p
        self.m = m
        self.q = q
        self.reduction = tuple(reduction) if reduction is not None else None
        self._exp: list[int] | None = None
        self._log: list[int] | None = None

        if m > 1:
            self._check_reduction_irreducible()

    # -- identity -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Field)
                and (self.p, self.m, self.reduction) == (other.p, other.m, other.reduction))

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.reduction))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    # -- element arithmetic -----------------------------------------------------

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of {self!r}")
        return a

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self._digitwise(a, b, 1)

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self._digitwise(a, b, -1)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self._digitwise(0, a, -1)

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._log is None:
            self._build_tables()
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse(f"zero has no inverse in {self!r}")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is None:
            self._build_tables()
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def elements(self) -> range:
        return range(self.q)

    # -- internals -----------------------------------------------------------------

    def _digitwise(self, a: int, b: int, sign: int) -> int:
        p = self.p
        out, shift = 0, 1
        for _ in range(self.m):
            out += ((a % p + sign * (b % p)) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def _mul_basis(self, a: int, b: int) -> int:
        """Schoolbook polynomial-basis product reduced by the modulus.

        Used to build the log tables (and as an independent check in tests).
        """
        p, m, red = self.p, self.m, self.reduction
        da = [0] * m
        i = 0
        while a:
            da[i] = a % p
            a //= p
            i += 1
        db = [0] * m
        i = 0
        while b:
            db[i] = b % p
            b //= p
            i += 1
        prod = [0] * (2 * m - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    if cb:
                        prod[i + j] = (prod[i + j] + ca * cb) % p
        # reduce by the monic modulus
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(m):
                    prod[i - m + j] = (prod[i - m + j] - c * red[j]) % p
        out = 0
        for c in reversed(prod[:m]):
            out = out * p + c
        return out

    def _pow_basis(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_basis(r, a)
            a = self._mul_basis(a, a)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        order = self.q - 1
        factors = _prime_factors(order)
        for c in range(2, self.q):
            if all(self._pow_basis(c, order // f) != 1 for f in factors):
                return c
        raise AssertionError("multiplicative group of a finite field is cyclic")

    def _build_tables(self) -> None:
        # lazy and idempotent: a racing second build computes the same tables
        g = self._find_generator()
        exp = [0] * (self.q - 1)
        log = [0] * self.q
        x = 1
        for i in range(self.q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_basis(x, g)
        self._exp, self._log = exp, log

    def _check_reduction_irreducible(self) -> None:
        from .poly import Poly, is_irreducible

        base = Field(self.p)
        rp = Poly(base, self.reduction)
        if not is_irreducible(rp):
            raise ReducibleModulus(
                f"reduction polynomial {list(self.reduction)} factors over GF({self.p})")


def GF(p: int, m: int = 1, reduction=None) -> Field:
    """Shorthand constructor."""
    return Field(p, m, reduction)

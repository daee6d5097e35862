"""Prime field arithmetic.

Every other module works on plain ``int`` residues for speed; :class:`FieldElement`
is the typed wrapper used at API boundaries and in interactive work.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Union

from .errors import DomainError

MAX_MODULUS = 2**31

# Deterministic for every n < 3.3e24, which covers all 64-bit inputs.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        raise DomainError(f"primality is only defined for n >= 2, got {n}")
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (n < 2**31 here)."""
    out: dict[int, int] = {}
    q = 2
    while q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in factorize(n).items():
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)


@dataclass(frozen=True)
class PrimeField:
    """The field Z_p for an odd prime p < 2**31."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise DomainError(f"modulus must be an integer, got {self.p!r}")
        if self.p < 3:
            raise DomainError(f"modulus must be an odd prime >= 3, got {self.p}")
        if self.p >= MAX_MODULUS:
            raise DomainError(f"modulus must be below 2**31, got {self.p}")
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __call__(self, value: Union[int, "FieldElement"]) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise DomainError(f"element of Z_{value.field.p} used in Z_{self.p}")
            return value
        return FieldElement(int(value) % self.p, self)

    def residue(self, value: Union[int, "FieldElement"]) -> int:
        """Reduce an int or an element of this field to a residue in [0, p)."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise DomainError(f"element of Z_{value.field.p} used in Z_{self.p}")
            return value.value
        return int(value) % self.p

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(x, self) for x in range(self.p)]

    # int-level arithmetic, used on hot paths

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def neg(self, x: int) -> int:
        return -x % self.p

    def mul(self, x: int, y: int) -> int:
        return x * y % self.p

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise DomainError("0 has no multiplicative inverse")
        return pow(x, -1, self.p)

    def pow(self, x: int, e: int) -> int:
        x %= self.p
        if e < 0:
            return pow(self.inv(x), -e, self.p)
        # square-and-multiply
        result, base = 1, x
        while e:
            if e & 1:
                result = result * base % self.p
            base = base * base % self.p
            e >>= 1
        return result

    def mult_order(self, g: int) -> int:
        g %= self.p
        if g == 0:
            raise DomainError("0 has no multiplicative order")
        k = self.p - 1
        # shrink k by each prime factor while g^k stays 1
        for q in factorize(self.p - 1):
            while k % q == 0 and pow(g, k // q, self.p) == 1:
                k //= q
        return k

    @cached_property
    def primitive_root(self) -> int:
        for g in range(2, self.p):
            if self.mult_order(g) == self.p - 1:
                return g
        # p = 3 lands here only if the loop is empty, which it is not
        raise AssertionError("unreachable: Z_p^* is cyclic")

    @cached_property
    def _log_tables(self) -> dict[int, list[int]]:
        return {}

    def log_table(self, base: int) -> list[int]:
        """``table[x]`` is the exponent e in [0, p-2] with base**e == x; table[0] = -1."""
        base %= self.p
        tables = self._log_tables
        if base not in tables:
            if base == 0 or self.mult_order(base) != self.p - 1:
                raise DomainError(f"{base} is not a primitive root mod {self.p}")
            table = [-1] * self.p
            x = 1
            for e in range(self.p - 1):
                table[x] = e
                x = x * base % self.p
            tables[base] = table
        return tables[base]

    def discrete_log(self, base: int, x: int) -> int:
        x %= self.p
        if x == 0:
            raise DomainError("discrete log of 0 is undefined")
        return self.log_table(base)[x]


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            raise DomainError(f"{self.value} is not a residue mod {self.field.p}")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DomainError(f"cannot mix Z_{self.field.p} and Z_{other.field.p}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(v % self.field.p, self.field)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.value * self.field.inv(o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(o * self.field.inv(self.value))

    def __neg__(self):
        return self._wrap(-self.value)

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"


# Function-style API mirroring the methods above.


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def neg(x: FieldElement) -> FieldElement:
    return -x


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def power(x: FieldElement, e: int) -> FieldElement:
    return x**e


def mult_order(g: FieldElement) -> int:
    return g.field.mult_order(g.value)


def primitive_root(field: PrimeField) -> FieldElement:
    return field(field.primitive_root)


def discrete_log(base: FieldElement, x: FieldElement) -> int:
    if base.field != x.field:
        raise DomainError(f"cannot mix Z_{base.field.p} and Z_{x.field.p}")
    return base.field.discrete_log(base.value, x.value)

"""Exact coefficient arithmetic.

Two concrete fields cover every computation in this package: the rationals
(`fractions.Fraction`, re-exported as ``Rational``) and the cyclotomic
quotient rings Q[q]/Phi_N(q), in which ``q`` is a primitive N-th root of
unity.  Cyclotomic elements are immutable residue tuples of length
phi(N) = deg Phi_N, so equality is structural and every operation is exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Rational = Fraction

#: Scalars accepted throughout the package: int, Fraction, or Cyclotomic.
Scalar = object


def euler_phi(n: int) -> int:
    """Euler's totient, by trial-division factorization."""
    if n < 1:
        raise ValueError("euler_phi needs a positive integer")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact division of integer polynomials with monic divisor (ascending coeffs).
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        out[i - dn] = c
        if c:
            for k, d in enumerate(den):
                num[i - dn + k] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("polynomial division was not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Ascending integer coefficients of the order-th cyclotomic polynomial.

    Computed by dividing q^order - 1 by the product of the cyclotomic
    polynomials of all proper divisors of ``order``.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if order == 1:
        return (-1, 1)
    num = [0] * (order + 1)
    num[0], num[order] = -1, 1
    for d in range(1, order):
        if order % d == 0:
            num = _poly_div_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot coerce {value!r} into a cyclotomic coefficient")


class Cyclotomic:
    """An element of Q[q]/Phi_N(q), stored as its residue of degree < phi(N).

    Mixed arithmetic with ints and Fractions coerces them into the ring, so
    polynomial code can stay agnostic about which field it is running over.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        phi = euler_phi(order)
        coeffs = [_as_fraction(c) for c in coeffs]
        if len(coeffs) > phi:
            coeffs = _reduce_mod_phi(order, coeffs)
        coeffs += [Fraction(0)] * (phi - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *_):
        raise AttributeError("Cyclotomic elements are immutable")

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> "Cyclotomic | None":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise ValueError(
                    f"mixed cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, [_as_fraction(other)])
        return None

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.order, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyclotomic(self.order, prod)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse; Phi_N is irreducible over Q, so every
        nonzero residue is invertible."""
        if not self:
            raise ZeroDivisionError("cyclotomic division by zero")
        phi = [_as_fraction(c) for c in cyclotomic_polynomial(self.order)]
        inv = _modular_inverse(list(self.coeffs), phi)
        return Cyclotomic(self.order, inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic(self.order, [1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- structure ---------------------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __repr__(self):
        return f"Cyclotomic({self.order}, {list(self.coeffs)!r})"

    def __str__(self):
        return f"{self.poly_str()} (mod Phi_{self.order})"

    def poly_str(self) -> str:
        """Render the residue as a polynomial in q, highest power first."""
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            if power == 0:
                body = str(c if c > 0 else -c)
            else:
                mag = c if c > 0 else -c
                qpow = "q" if power == 1 else f"q^{power}"
                body = qpow if mag == 1 else f"{mag}*{qpow}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+{body}" if c > 0 else f"-{body}")
        return "".join(parts) if parts else "0"


def _reduce_mod_phi(order: int, coeffs: list[Fraction]) -> list[Fraction]:
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            for k, d in enumerate(phi):
                coeffs[i - deg + k] -= c * d
    return coeffs[:deg]


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    while num and not num[-1]:
        num.pop()
    dden = len(den) - 1
    while den and not den[-1]:
        den.pop()
        dden -= 1
    quo = [Fraction(0)] * max(len(num) - dden, 0)
    lead = den[-1]
    for i in range(len(num) - 1, dden - 1, -1):
        c = num[i] / lead
        if c:
            quo[i - dden] = c
            for k, d in enumerate(den):
                num[i - dden + k] -= c * d
    while num and not num[-1]:
        num.pop()
    return quo, num


def _modular_inverse(value: list[Fraction], modulus: list[Fraction]) -> list[Fraction]:
    # Extended Euclid in Q[q]: returns s with s*value = 1 mod modulus.
    r0, r1 = list(modulus), list(value)
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while any(r1):
        quo, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        qs = _poly_mul(quo, s1)
        s0, s1 = s1, _poly_sub(s0, qs)
    if len(r0) != 1:
        raise ArithmeticError("element not invertible modulo the given polynomial")
    return [c / r0[0] for c in s0]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


class RationalField:
    """The rationals, wrapped with the little protocol the parsers use."""

    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Cyclotomic):
            raise TypeError("cyclotomic value in a rational context")
        return _as_fraction(value)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class CyclotomicField:
    """Q[q]/Phi_N(q) as a value-level field descriptor."""

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order
        self.name = f"QQ(zeta_{order})"
        self.zero = Cyclotomic(order, [])
        self.one = Cyclotomic(order, [1])
        #: the distinguished primitive order-th root of unity
        self.q = Cyclotomic(order, [0, 1]) if euler_phi(order) > 1 else self._q_small()

    def _q_small(self):
        # phi(1) = phi(2) = 1: q is the rational root 1 resp. -1.
        return Cyclotomic(self.order, [1 if self.order == 1 else -1])

    def coerce(self, value):
        if isinstance(value, Cyclotomic):
            if value.order != self.order:
                raise ValueError("cyclotomic order mismatch")
            return value
        return Cyclotomic(self.order, [_as_fraction(value)])

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("cyclotomic", self.order))


QQ = RationalField()


def scalar_str(value) -> str:
    """Text form used in polynomial rendering and JSON reports."""
    if isinstance(value, Cyclotomic):
        if value.is_rational():
            return str(value.coeffs[0])
        return f"({value.poly_str()})"
    return str(value)


def parse_scalar(text: str):
    """Parse the standalone scalar text forms.

    ``p/q`` or ``p`` for rationals; ``<poly in q> (mod Phi_N)`` for
    cyclotomic literals, e.g. ``q^2+q+1 (mod Phi_3)``.
    """
    text = text.strip()
    if "(mod" in text:
        body, _, tail = text.partition("(mod")
        tail = tail.strip(" )")
        if not tail.startswith("Phi_"):
            raise ValueError(f"malformed cyclotomic annotation in {text!r}")
        order = int(tail[4:])
        return parse_q_poly(body.strip(), order)
    return Fraction(text)


def parse_q_poly(text: str, order: int) -> Cyclotomic:
    field = CyclotomicField(order)
    text = text.replace("-", "+-").replace(" ", "")
    total = field.zero
    for chunk in text.split("+"):
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:]
        coeff, power = Fraction(1), 0
        if "q" in chunk:
            head, _, tail = chunk.partition("q")
            if head:
                coeff = Fraction(head.rstrip("*"))
            power = int(tail[1:]) if tail.startswith("^") else (1 if not tail else 0)
            if tail and not tail.startswith("^"):
                raise ValueError(f"malformed term {chunk!r}")
        else:
            coeff = Fraction(chunk)
        total = total + sign * coeff * field.q ** power
    return total

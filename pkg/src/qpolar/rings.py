"""Commutative local rings with exact arithmetic.

Four kinds of ring are provided, all local (unique maximal ideal):

* ``PrimeField(p)``        -- Z/p for a prime p, spelled ``F<p>``
* ``IntegersMod(p, k)``    -- Z/p^k, spelled ``Z<p>^<k>``
* ``LocalizedIntegers(p)`` -- Z localized at p, i.e. fractions m/n with
  p not dividing n, spelled ``Zloc<p>``
* ``TruncatedSeriesRing(base, m)`` -- base[[x]]/(x^m) for another ring
  from this list, spelled ``series(<ring>,<m>)``

Because every ring here is local, an element is either a unit or lies in
the Jacobson radical; ``in_jacobson`` is defined as ``not is_unit`` and
the tests exercise that dichotomy exhaustively on the finite kinds.

Elements are immutable wrappers around a canonical payload: an integer
residue in [0, p^k), a reduced ``fractions.Fraction``, or a tuple of m
base-ring coefficients.  All arithmetic is exact; nothing here floats.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import isqrt


class QpolarError(Exception):
    """Base class for every error raised by this package."""


class RingMismatch(QpolarError):
    """Two elements from different rings were combined."""


class NotAUnit(QpolarError):
    """Inversion was requested for a non-unit."""


class InfiniteRing(QpolarError):
    """Enumeration was requested for a ring without finitely many elements."""


class InvalidElement(QpolarError):
    """A value does not describe an element of the target ring."""


class RingParseError(QpolarError):
    """A ring or element literal could not be parsed."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d <= isqrt(n):
        if n % d == 0:
            return False
        d += 2
    return True


class RingElement:
    """An element of a :class:`LocalRing`, with operator overloads.

    Integers coerce automatically (``a + 1`` works in any ring); elements
    of distinct rings never mix.
    """

    __slots__ = ("ring", "payload")

    def __init__(self, ring: LocalRing, payload):
        self.ring = ring
        self.payload = payload

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch(f"cannot combine {self.ring} with {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.ring.add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.ring.add(self, self.ring.neg(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.ring.add(o, self.ring.neg(self))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.ring.mul(self, o)

    __rmul__ = __mul__

    def __neg__(self):
        return self.ring.neg(self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.ring.mul(self, self.ring.inverse(o))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.ring.inverse(self) ** (-n)
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, RingElement) else other
        if not isinstance(o, RingElement):
            return NotImplemented
        return self.ring == o.ring and self.payload == o.payload

    def __hash__(self):
        return hash((self.ring, self.payload))

    def __bool__(self):
        return self != self.ring.zero

    def is_unit(self) -> bool:
        return self.ring.is_unit(self)

    def in_jacobson(self) -> bool:
        return self.ring.in_jacobson(self)

    def inverse(self) -> RingElement:
        return self.ring.inverse(self)

    def __repr__(self):
        return self.ring.format_element(self)


class LocalRing:
    """Shared behaviour for the four ring kinds."""

    def element(self, value) -> RingElement:
        raise NotImplementedError

    def parse(self, text: str) -> RingElement:
        raise NotImplementedError

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        raise NotImplementedError

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        raise NotImplementedError

    def neg(self, a: RingElement) -> RingElement:
        raise NotImplementedError

    def is_unit(self, a: RingElement) -> bool:
        raise NotImplementedError

    def inverse(self, a: RingElement) -> RingElement:
        raise NotImplementedError

    def in_jacobson(self, a: RingElement) -> bool:
        # The local dichotomy: non-units are exactly the radical.
        return not self.is_unit(a)

    def elements(self):
        raise NotImplementedError

    def cardinality(self) -> int:
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        raise NotImplementedError

    def format_element(self, a: RingElement) -> str:
        raise NotImplementedError

    @property
    def zero(self) -> RingElement:
        return self.element(0)

    @property
    def one(self) -> RingElement:
        return self.element(1)


class _ModularRing(LocalRing):
    """Common code for Z/p and Z/p^k; payload is a residue in [0, modulus)."""

    def __init__(self, p: int, k: int):
        if not _is_prime(p):
            raise InvalidElement(f"{p} is not prime")
        if k < 1:
            raise InvalidElement(f"exponent must be positive, got {k}")
        self.p = p
        self.k = k
        self.modulus = p**k

    def element(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.ring != self:
                raise RingMismatch(f"{value!r} is not in {self}")
            return value
        if isinstance(value, int):
            return RingElement(self, value % self.modulus)
        raise InvalidElement(f"cannot build an element of {self} from {value!r}")

    def parse(self, text: str) -> RingElement:
        try:
            return self.element(int(text.strip()))
        except ValueError:
            raise RingParseError(f"bad integer literal {text!r} for {self}") from None

    def add(self, a, b):
        return RingElement(self, (a.payload + b.payload) % self.modulus)

    def mul(self, a, b):
        return RingElement(self, (a.payload * b.payload) % self.modulus)

    def neg(self, a):
        return RingElement(self, (-a.payload) % self.modulus)

    def is_unit(self, a):
        return a.payload % self.p != 0

    def inverse(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{a!r} is not a unit in {self}")
        return RingElement(self, pow(a.payload, -1, self.modulus))

    def elements(self):
        for r in range(self.modulus):
            yield RingElement(self, r)

    def cardinality(self):
        return self.modulus

    @property
    def is_finite(self):
        return True

    def format_element(self, a):
        return str(a.payload)


class PrimeField(_ModularRing):
    """The field Z/p, spelled ``F<p>``."""

    def __init__(self, p: int):
        super().__init__(p, 1)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"F{self.p}"


class IntegersMod(_ModularRing):
    """The local ring Z/p^k, spelled ``Z<p>^<k>``."""

    def __eq__(self, other):
        return isinstance(other, IntegersMod) and (other.p, other.k) == (self.p, self.k)

    def __hash__(self):
        return hash(("Z", self.p, self.k))

    def __repr__(self):
        return f"Z{self.p}^{self.k}"


class LocalizedIntegers(LocalRing):
    """Z localized at a prime p: fractions m/n with p not dividing n.

    Payloads are reduced ``Fraction`` values, so canonical form is free.
    A fraction is a unit exactly when p does not divide its numerator.
    """

    def __init__(self, p: int):
        if not _is_prime(p):
            raise InvalidElement(f"{p} is not prime")
        self.p = p

    def element(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.ring != self:
                raise RingMismatch(f"{value!r} is not in {self}")
            return value
        if isinstance(value, int):
            return RingElement(self, Fraction(value))
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise InvalidElement(f"{value} has denominator divisible by {self.p}")
            return RingElement(self, value)
        raise InvalidElement(f"cannot build an element of {self} from {value!r}")

    def parse(self, text: str) -> RingElement:
        s = text.strip()
        try:
            f = Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise RingParseError(f"bad fraction literal {text!r} for {self}") from None
        try:
            return self.element(f)
        except InvalidElement as exc:
            raise RingParseError(str(exc)) from None

    def add(self, a, b):
        return RingElement(self, a.payload + b.payload)

    def mul(self, a, b):
        return RingElement(self, a.payload * b.payload)

    def neg(self, a):
        return RingElement(self, -a.payload)

    def is_unit(self, a):
        return a.payload.numerator % self.p != 0

    def inverse(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{a!r} is not a unit in {self}")
        return RingElement(self, 1 / a.payload)

    def elements(self):
        raise InfiniteRing(f"{self} has infinitely many elements")

    def cardinality(self):
        raise InfiniteRing(f"{self} has infinitely many elements")

    @property
    def is_finite(self):
        return False

    def format_element(self, a):
        return str(a.payload)

    def __eq__(self, other):
        return isinstance(other, LocalizedIntegers) and other.p == self.p

    def __hash__(self):
        return hash(("Zloc", self.p))

    def __repr__(self):
        return f"Zloc{self.p}"


class TruncatedSeriesRing(LocalRing):
    """base[[x]]/(x^m): power series in x over ``base``, truncated at x^m.

    Payloads are tuples of exactly m base-ring elements, constant term
    first.  A series is a unit iff its constant term is; inverses are
    computed coefficient by coefficient from the convolution identity.
    """

    def __init__(self, base: LocalRing, precision: int):
        if precision < 1:
            raise InvalidElement(f"precision must be positive, got {precision}")
        self.base = base
        self.precision = precision

    def element(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.ring == self:
                return value
            if value.ring == self.base:
                value = [value]
            else:
                raise RingMismatch(f"{value!r} is not in {self}")
        if isinstance(value, int):
            value = [value]
        if isinstance(value, (list, tuple)):
            coeffs = [self.base.element(c) for c in value[: self.precision]]
            coeffs += [self.base.zero] * (self.precision - len(coeffs))
            return RingElement(self, tuple(coeffs))
        raise InvalidElement(f"cannot build an element of {self} from {value!r}")

    def parse(self, text: str) -> RingElement:
        # Accepts "c0 + c1*x + c2*x^2 + ..." with integer or fraction
        # coefficients; bare "x" and "x^k" mean coefficient one.
        coeffs = [self.base.zero] * self.precision
        src = text.strip()
        if not src:
            raise RingParseError("empty series literal")
        for raw in src.replace("-", "+-").split("+"):
            term = raw.strip()
            if not term:
                continue
            negate = term.startswith("-")
            if negate:
                term = term[1:].strip()
            if "*" in term:
                cpart, xpart = (s.strip() for s in term.split("*", 1))
            elif term.startswith("x"):
                cpart, xpart = "1", term
            else:
                cpart, xpart = term, ""
            if xpart == "":
                power = 0
            elif xpart == "x":
                power = 1
            elif xpart.startswith("x^"):
                try:
                    power = int(xpart[2:])
                except ValueError:
                    raise RingParseError(f"bad power {xpart!r} in {text!r}") from None
            else:
                raise RingParseError(f"bad term {raw.strip()!r} in {text!r}")
            if power < 0:
                raise RingParseError(f"negative power in {text!r}")
            c = self.base.parse(cpart)
            if negate:
                c = -c
            if power < self.precision:
                coeffs[power] = coeffs[power] + c
        return RingElement(self, tuple(coeffs))

    def add(self, a, b):
        return RingElement(self, tuple(x + y for x, y in zip(a.payload, b.payload)))

    def mul(self, a, b):
        m = self.precision
        out = [self.base.zero] * m
        for i, ai in enumerate(a.payload):
            if not ai:
                continue
            for j in range(m - i):
                bj = b.payload[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return RingElement(self, tuple(out))

    def neg(self, a):
        return RingElement(self, tuple(-c for c in a.payload))

    def is_unit(self, a):
        return a.payload[0].is_unit()

    def inverse(self, a):
        # b0 = a0^-1, then a*b = 1 forces b_i = -a0^-1 * sum a_k b_{i-k}.
        if not self.is_unit(a):
            raise NotAUnit(f"{a!r} is not a unit in {self}")
        c0 = a.payload[0].inverse()
        out = [c0]
        for i in range(1, self.precision):
            s = self.base.zero
            for k in range(1, i + 1):
                ak = a.payload[k]
                if ak:
                    s = s + ak * out[i - k]
            out.append(-(c0 * s))
        return RingElement(self, tuple(out))

    def elements(self):
        base_elems = list(self.base.elements())
        for combo in product(base_elems, repeat=self.precision):
            yield RingElement(self, combo)

    def cardinality(self):
        return self.base.cardinality() ** self.precision

    @property
    def is_finite(self):
        return self.base.is_finite

    def format_element(self, a):
        terms = []
        for power, c in enumerate(a.payload):
            if not c:
                continue
            cs = self.base.format_element(c)
            wrapped = f"({cs})" if ("+" in cs or " " in cs) else cs
            if power == 0:
                terms.append(cs)
            elif power == 1:
                terms.append("x" if cs == "1" else f"{wrapped}*x")
            else:
                terms.append(f"x^{power}" if cs == "1" else f"{wrapped}*x^{power}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeriesRing)
            and other.base == self.base
            and other.precision == self.precision
        )

    def __hash__(self):
        return hash(("series", self.base, self.precision))

    def __repr__(self):
        return f"series({self.base},{self.precision})"


def parse_ring(text: str) -> LocalRing:
    """Parse a ring spelling: F<p>, Z<p>^<k>, Zloc<p>, series(<ring>,<m>)."""
    s = text.strip()
    if not s:
        raise RingParseError("empty ring spelling")
    if s.startswith("series"):
        rest = s[len("series") :].strip()
        if not (rest.startswith("(") and rest.endswith(")")):
            raise RingParseError(f"expected series(<ring>,<m>) in {text!r}")
        inner = rest[1:-1]
        depth = 0
        split_at = -1
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                split_at = i
        if split_at < 0:
            raise RingParseError(f"missing precision in {text!r}")
        base = parse_ring(inner[:split_at])
        try:
            m = int(inner[split_at + 1 :].strip())
        except ValueError:
            raise RingParseError(f"bad precision in {text!r}") from None
        if m < 1:
            raise RingParseError(f"precision must be positive in {text!r}")
        return TruncatedSeriesRing(base, m)
    if s.startswith("Zloc"):
        try:
            p = int(s[4:])
        except ValueError:
            raise RingParseError(f"bad prime in {text!r}") from None
        _require_prime(p, text)
        return LocalizedIntegers(p)
    if s.startswith("Z"):
        body = s[1:]
        if "^" not in body:
            raise RingParseError(f"expected Z<p>^<k> in {text!r} (use F<p> for fields)")
        ptext, ktext = body.split("^", 1)
        try:
            p, k = int(ptext), int(ktext)
        except ValueError:
            raise RingParseError(f"bad Z<p>^<k> spelling in {text!r}") from None
        _require_prime(p, text)
        if k < 1:
            raise RingParseError(f"exponent must be positive in {text!r}")
        return IntegersMod(p, k)
    if s.startswith("F"):
        try:
            p = int(s[1:])
        except ValueError:
            raise RingParseError(f"bad prime in {text!r}") from None
        _require_prime(p, text)
        return PrimeField(p)
    raise RingParseError(f"unrecognized ring spelling {text!r}")


def _require_prime(p: int, text: str) -> None:
    if not _is_prime(p):
        raise RingParseError(f"{p} is not prime in {text!r}")

"""Exact scalar arithmetic over prime fields GF(p) and the rationals.

Scalars are carried as plain Python values: canonical residues
``0 <= v < p`` (``int``) for GF(p) and reduced ``fractions.Fraction``
for the rationals.  A :class:`Field` object supplies the arithmetic,
canonicalization and string (de)serialization for those raw values.
"""

from __future__ import annotations

from fractions import Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every 64-bit integer."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """A prime field GF(p) (``p`` prime) or the rational field (``p is None``).

    Fields are value-comparable: two instances with the same ``p`` are equal.
    """

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if p >= 1 << 63:
                raise ValueError("prime must fit in a machine word")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        self.p = p

    # -- identity ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    # -- arithmetic on raw values -----------------------------------------

    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def canon(self, x):
        """Canonicalize an int / Fraction / string into a field value."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p is not None:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"{x} is not an element of {self!r}")
                x = x.numerator
            return x % self.p
        return Fraction(x)

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a):
        return (-a) % self.p if self.p is not None else -a

    def inv(self, a):
        if self.p is not None:
            if a % self.p == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, self.p - 2, self.p)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- enumeration / sampling -------------------------------------------

    def elements(self):
        """Iterate over all field elements (finite fields only)."""
        if self.p is None:
            raise ValueError("the rational field is infinite")
        return range(self.p)

    def sample(self, rng):
        """Draw one scalar; small integers over the rationals."""
        if self.p is not None:
            return rng.randrange(self.p)
        return Fraction(rng.randint(-5, 5))

    # -- serialization ------------------------------------------------------

    def parse(self, s: str):
        s = s.strip()
        if "/" in s:
            if self.p is not None:
                num, den = s.split("/")
                return self.div(int(num) % self.p, int(den) % self.p)
            return Fraction(s)
        return self.canon(int(s))

    def format(self, v) -> str:
        if self.p is not None:
            return str(v % self.p)
        v = Fraction(v)
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def to_json(self) -> dict:
        if self.p is None:
            return {"kind": "q"}
        return {"kind": "gf", "p": self.p}

    @staticmethod
    def from_json(data: dict) -> "Field":
        kind = data.get("kind")
        if kind == "q":
            return QQ
        if kind == "gf":
            return Field(int(data["p"]))
        raise ValueError(f"unknown field kind {kind!r}")


def GF(p: int) -> Field:
    return Field(p)


QQ = Field(None)

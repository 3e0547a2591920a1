"""Exact scalar fields: the rationals (p = 0) and the prime fields F_p."""

from fractions import Fraction

from .combinat import check_prime_or_zero


class Field:
    """Q when p == 0, otherwise Z/pZ with residues stored as ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p=0):
        check_prime_or_zero(p)
        self.p = p

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            num, den = x.numerator, x.denominator
            if den % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return num * pow(den, -1, self.p) % self.p
        if isinstance(x, str):
            return self(Fraction(x))
        return int(x) % self.p

    def inv(self, x):
        if self.p == 0:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.p)

    def to_str(self, x):
        return str(x)


QQ = Field(0)


def field_of(p):
    if isinstance(p, Field):
        return p
    return Field(p)

"""
Exact arithmetic in GF(p^e) for q <= 64
Elements are integers 0..q-1 holding base-p coefficient vectors; operations are table lookups
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import sympy

from app.core.config import EXHAUSTIVE_AXIOM_ORDER, FIELD_AXIOM_SAMPLES, MAX_FIELD_ORDER
from app.core.errors import NotPrimeError, UnsupportedOrderError

logger = logging.getLogger(__name__)

# Lexicographically least monic irreducible of degree e over GF(p):
# coefficients c_0..c_e, least integer sum(c_i p^i) over the lower coefficients.
REDUCTION_POLYNOMIALS: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 0, 1),
    (7, 2): (1, 0, 1),
}


# Polynomials over GF(p) as coefficient lists, lowest degree first

def _trim(poly: List[int]) -> List[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> List[int]:
    """Remainder of a modulo the monic polynomial m"""
    r = _trim([c % p for c in a])
    dm = len(m) - 1
    while len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for i, c in enumerate(m):
            r[shift + i] = (r[shift + i] - lead * c) % p
        _trim(r)
    return r


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def monic_polynomials(p: int, degree: int):
    """All monic polynomials of the given degree, lowest coefficient first"""
    for lower in itertools.product(range(p), repeat=degree):
        yield list(lower) + [1]


def is_irreducible(p: int, poly: Sequence[int]) -> bool:
    """Irreducibility by trial division by every monic factor of degree <= deg/2"""
    e = len(poly) - 1
    if e < 1:
        return False
    for d in range(1, e // 2 + 1):
        for divisor in monic_polynomials(p, d):
            if not poly_mod(poly, divisor, p):
                return False
    return True


class Field:
    """GF(p^e) with precomputed addition and multiplication tables"""

    def __init__(self, p: int, e: int = 1):
        if not sympy.isprime(p):
            raise NotPrimeError(f"{p} is not prime")
        if e < 1 or p**e > MAX_FIELD_ORDER:
            raise UnsupportedOrderError(f"GF({p}^{e}) outside the supported orders <= {MAX_FIELD_ORDER}")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus: Tuple[int, ...] = REDUCTION_POLYNOMIALS.get((p, e), (0, 1))
        if e > 1 and not is_irreducible(p, self.modulus):
            raise UnsupportedOrderError(f"reduction polynomial for GF({p}^{e}) is reducible")

        q = self.q
        self._digits = [self._to_digits(a) for a in range(q)]
        self.add_table = [[self._from_digits([(x + y) % p for x, y in zip(self._digits[a], self._digits[b])])
                           for b in range(q)] for a in range(q)]
        self.mul_table = [[self._poly_product(a, b) for b in range(q)] for a in range(q)]
        self.neg_table = [self.add_table[a].index(0) for a in range(q)]
        self.inv_table = [0] + [self.mul_table[a].index(1) for a in range(1, q)]
        self.generator = self._find_generator()
        self.squares = frozenset(self.mul_table[a][a] for a in range(1, q))
        self._verify_axioms()
        logger.debug(f"built GF({q}) with generator {self.generator}")

    def _to_digits(self, a: int) -> List[int]:
        digits = []
        for _ in range(self.e):
            digits.append(a % self.p)
            a //= self.p
        return digits

    def _from_digits(self, digits: Sequence[int]) -> int:
        value = 0
        for c in reversed(list(digits)):
            value = value * self.p + c
        return value

    def _poly_product(self, a: int, b: int) -> int:
        prod = poly_mul(_trim(list(self._digits[a])), _trim(list(self._digits[b])), self.p)
        if self.e > 1:
            prod = poly_mod(prod, self.modulus, self.p)
        prod = prod + [0] * (self.e - len(prod))
        return self._from_digits(prod[: self.e])

    def _find_generator(self) -> int:
        order = self.q - 1
        if order == 1:
            return 1
        prime_factors = list(sympy.factorint(order))
        for g in range(2 if self.q > 2 else 1, self.q):
            if all(self.power(g, order // f) != 1 for f in prime_factors):
                return g
        raise UnsupportedOrderError(f"no generator found for GF({self.q})")  # cannot happen for a field

    def _verify_axioms(self) -> None:
        q = self.q
        if q <= EXHAUSTIVE_AXIOM_ORDER:
            triples = itertools.product(range(q), repeat=3)
        else:
            rng = random.Random(q)
            triples = ((rng.randrange(q), rng.randrange(q), rng.randrange(q)) for _ in range(FIELD_AXIOM_SAMPLES))
        add, mul = self.add_table, self.mul_table
        for a, b, c in triples:
            if add[add[a][b]][c] != add[a][add[b][c]] or mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise UnsupportedOrderError(f"associativity fails in GF({q}) at {(a, b, c)}")
            if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                raise UnsupportedOrderError(f"distributivity fails in GF({q}) at {(a, b, c)}")
        for a in range(1, q):
            if mul[a][self.inv_table[a]] != 1:
                raise UnsupportedOrderError(f"{a} has no inverse in GF({q})")

    # Raw integer arithmetic used by the constructions

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.inv_table[a]

    def power(self, a: int, k: int) -> int:
        result = 1
        for _ in range(k):
            result = self.mul_table[result][a]
        return result

    # Element-level API

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, value % self.q if self.e == 1 else value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> List["FieldElement"]:
        return [FieldElement(self, a) for a in range(self.q)]

    def format(self, a: int) -> str:
        """Integer for prime fields, polynomial in x otherwise"""
        if self.e == 1:
            return str(a)
        terms = []
        for power, c in reversed(list(enumerate(self._digits[a]))):
            if not c:
                continue
            if power == 0:
                terms.append(str(c))
            else:
                mono = "x" if power == 1 else f"x^{power}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash((self.p, self.e))


@dataclass(frozen=True)
class FieldElement:
    """An element of a Field"""

    field: Field
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"{self.value} is not an element of {self.field}")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.field(other).value
        raise TypeError(f"cannot combine a field element with {type(other).__name__}")

    def __add__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(self._coerce(other))))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FieldElement(self.field, self.field.power(self.value, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def is_square(self) -> bool:
        """Nonzero square"""
        return self.value in self.field.squares

    @property
    def coefficients(self) -> Tuple[int, ...]:
        return tuple(self.field._digits[self.value])

    def __str__(self) -> str:
        return self.field.format(self.value)


@lru_cache(maxsize=None)
def field_make(p: int, e: int = 1) -> Field:
    """Cached field constructor"""
    return Field(p, e)


def field_of_order(q: int) -> Field:
    """GF(q) for a prime power q <= 64"""
    if q < 2 or q > MAX_FIELD_ORDER:
        raise UnsupportedOrderError(f"field order {q} outside 2..{MAX_FIELD_ORDER}")
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise UnsupportedOrderError(f"{q} is not a prime power")
    (p, e), = factors.items()
    return field_make(int(p), int(e))

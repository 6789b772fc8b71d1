"""
Small finite fields F_q, q = p^m, on top of galois.GF.

Non-prime fields use a fixed irreducible polynomial so that the integer
encoding of elements (coefficient vectors read in base p) is reproducible.
"""

from __future__ import annotations

from functools import cached_property
from typing import List

import galois
import numpy as np

from src.config.constants import FIELD_POLYNOMIALS
from src.utils.exceptions import GroupSpecParseError


class SmallField:
    """
    The field with q = p^m elements, elements encoded as integers 0..q-1.

    Attributes:
        p: characteristic
        m: degree over the prime field
        modulus: coefficients of the defining polynomial, highest degree first
        GF: the galois FieldArray class doing the arithmetic
    """

    def __init__(self, q: int):
        if q < 2 or not galois.is_prime_power(q):
            raise GroupSpecParseError(f"{q} is not a prime power")
        primes, exponents = galois.factors(q)
        self.p = int(primes[0])
        self.m = int(exponents[0])
        self.q = q
        if self.m == 1:
            self.modulus = [1, 0]
            self.GF = galois.GF(q)
        else:
            if q not in FIELD_POLYNOMIALS:
                raise GroupSpecParseError(f"No fixed irreducible polynomial for F_{q}")
            prime, coeffs = FIELD_POLYNOMIALS[q]
            poly = galois.Poly(coeffs, field=galois.GF(prime))
            self.modulus = list(coeffs)
            self.GF = galois.GF(q, irreducible_poly=poly)

    def __repr__(self) -> str:
        return f"SmallField(q={self.q}, p={self.p}, m={self.m})"

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------

    @property
    def elements(self):
        return self.GF.elements

    def encode(self, values) -> np.ndarray:
        """Field array -> integer indices."""
        return np.asarray(values.view(np.ndarray), dtype=np.int64)

    def element(self, index: int):
        return self.GF(index)

    def add(self, a: int, b: int) -> int:
        return int(self.GF(a) + self.GF(b))

    def mul(self, a: int, b: int) -> int:
        return int(self.GF(a) * self.GF(b))

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.GF(1) / self.GF(a))

    @cached_property
    def primitive_element(self) -> int:
        return int(self.GF.primitive_element)

    def multiplicative_order(self, a: int) -> int:
        x = self.GF(a)
        return int(x.multiplicative_order())

    @cached_property
    def squares(self) -> List[int]:
        nonzero = self.GF.elements[1:]
        return sorted({int(v) for v in nonzero ** 2})

    def is_multiplicative_group_cyclic(self) -> bool:
        return self.multiplicative_order(self.primitive_element) == self.q - 1

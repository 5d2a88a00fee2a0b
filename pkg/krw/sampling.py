"""Seeded random elements for property checks

Monomials are drawn uniformly with x, z, t degrees up to max_degree and y
degree up to max_y_degree (3 by default), with nonzero integer coefficients
in [-bound, bound], then canonicalized. Zero elements are redrawn.
"""

import logging
import random
from typing import Sequence

from krw.poly import GENERATORS, Polynomial, Symbol, T, Y, Z, mono_of
from krw.quotient import QuotientElement, QuotientRingSpec

logger = logging.getLogger(__name__)

MAX_Y_DEGREE = 3
# factors of sampled products
PRODUCT_MAX_Y_DEGREE = 2
PRODUCT_MAX_TERMS = 2


def check_rng(seed: int, check_name: str) -> random.Random:
    """Independent stream per check so one check's draws never shift another's"""
    return random.Random(f"{seed}:{check_name}")


class ElementSampler:
    """Draws random polynomials and ring elements from a fixed stream"""

    def __init__(self, ring: QuotientRingSpec, rng: random.Random, max_degree: int,
                 coefficient_bound: int, max_terms: int = 3, max_y_degree: int = MAX_Y_DEGREE):
        self.ring = ring
        self.rng = rng
        self.max_degree = max_degree
        self.coefficient_bound = coefficient_bound
        self.max_terms = max_terms
        self.max_y_degree = max_y_degree

    def coefficient(self) -> int:
        c = 0
        while c == 0:
            c = self.rng.randint(-self.coefficient_bound, self.coefficient_bound)
        return c

    def _exponent(self, sym: Symbol) -> int:
        top = self.max_y_degree if sym == Y else self.max_degree
        return self.rng.randint(0, top)

    def polynomial(self, symbols: Sequence[Symbol] = GENERATORS, max_terms: int = 0) -> Polynomial:
        """Random nonzero polynomial in the given symbols"""
        count = self.rng.randint(1, max_terms or self.max_terms)
        while True:
            terms = {}
            for _ in range(count):
                m = mono_of({s: self._exponent(s) for s in symbols})
                terms[m] = terms.get(m, 0) + self.coefficient()
            p = Polynomial(terms)
            if p:
                return p

    def element(self, symbols: Sequence[Symbol] = GENERATORS) -> QuotientElement:
        """Random nonzero element of the ring"""
        while True:
            e = self.ring.element(self.polynomial(symbols))
            if not e.is_zero:
                return e
            logger.debug("Redrawing zero sample")

    def zt_polynomial(self, max_terms: int = 2) -> Polynomial:
        return self.polynomial((Z, T), max_terms)

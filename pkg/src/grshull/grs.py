"""Generalized Reed-Solomon codes.

A code here is the image of the polynomials of degree < k under
evaluation at n distinct points alpha_i, each coordinate scaled by a
nonzero column multiplier v_i.  Standing requirements, enforced at
construction: 1 <= k < n < q, distinct evaluation points, nonzero
multipliers, and n coprime to the field characteristic (equivalently to
q), which keeps the point-product polynomial's derivative in play.

The dual of such a code is again one of the same kind on the same
points, with multipliers 1/(v_i * h'(alpha_i)) where h is the monic
polynomial vanishing exactly on the points.
"""

from __future__ import annotations

import math
from typing import List, Optional, Sequence, Union

import numpy as np

from .errors import BadParameters, BudgetExceeded
from .gf import Field, FieldElement
from .linalg import Matrix
from .poly import Poly

_BRUTE_DEFAULT_LIMIT = 1 << 20
_NUMPY_TABLE_MAX_Q = 1024


def _min_distance_rows(
    field: Field, rows: Sequence[Sequence[int]], n: int, limit: int
) -> int:
    """Minimum weight of the span of linearly independent rows, by full
    enumeration of all q^len(rows) combinations."""
    F = field
    q = F.q
    k = len(rows)
    if k == 0:
        raise BadParameters("minimum distance of the zero code is undefined")
    if q**k > limit:
        raise BudgetExceeded(f"{q}^{k} codewords exceed the enumeration limit {limit}")
    if q <= _NUMPY_TABLE_MAX_Q:
        add = _np_add_table(F)
        words = np.zeros((1, n), dtype=np.uint16)
        for row in rows:
            blocks = []
            for c in range(q):
                scaled = np.asarray(F.row_scale(list(row), c), dtype=np.uint16)
                blocks.append(add[words, scaled[None, :]])
            words = np.concatenate(blocks, axis=0)
        weights = np.count_nonzero(words, axis=1)
        return int(weights[1:].min())  # row 0 is the zero codeword
    # large q only ever meets the limit with k = 1
    best = n + 1
    for msg in range(1, q**k):
        word = [0] * n
        m = msg
        for row in rows:
            c = m % q
            m //= q
            if c:
                word = [F.add(a, F.mul(c, b)) for a, b in zip(word, row)]
        best = min(best, sum(1 for a in word if a))
    return best


def _np_add_table(field: Field) -> np.ndarray:
    table = getattr(field, "_np_add_cache", None)
    if table is None:
        q = field.q
        table = np.empty((q, q), dtype=np.uint16)
        for a in range(q):
            table[a, :] = [field.add(a, b) for b in range(q)]
        field._np_add_cache = table
    return table


class GrsCode:
    """An [n, k] code from evaluation points and column multipliers."""

    def __init__(
        self,
        field: Field,
        alphas: Sequence[Union[FieldElement, int]],
        multipliers: Sequence[Union[FieldElement, int]],
        k: int,
        interpolant: Optional[Poly] = None,
    ):
        """`interpolant`, when given, must be the degree < n polynomial
        taking value 1/v_i at alpha_i; it is checked and otherwise ignored
        (the same polynomial is always recomputed on demand)."""
        F = field

        def rep_of(e):
            if isinstance(e, FieldElement):
                if e.field is not F:
                    raise BadParameters("entry from a different field")
                return e.rep
            return F.from_subfield_int(e)

        a = [rep_of(e) for e in alphas]
        v = [rep_of(e) for e in multipliers]
        n = len(a)
        if len(v) != n:
            raise BadParameters(f"{n} evaluation points but {len(v)} multipliers")
        if not 1 <= k < n:
            raise BadParameters(f"need 1 <= k < n, got k={k}, n={n}")
        if n >= F.q:
            raise BadParameters(f"need n < q, got n={n}, q={F.q}")
        if len(set(a)) != n:
            raise BadParameters("DuplicateAlpha: evaluation points must be distinct")
        if any(x == 0 for x in v):
            raise BadParameters("column multipliers must be nonzero")
        if math.gcd(n, F.q) != 1:
            raise BadParameters(
                f"length n={n} must be coprime to the field order q={F.q}"
            )
        self.field = F
        self.alphas = tuple(a)
        self.multipliers = tuple(v)
        self.n = n
        self.k = k
        self._s: Optional[Poly] = None
        self._h: Optional[Poly] = None
        if interpolant is not None:
            if interpolant.field is not F:
                raise BadParameters("interpolant over a different field")
            if interpolant.degree != float("-inf") and interpolant.degree >= n:
                raise BadParameters(
                    f"interpolant degree {interpolant.degree} is not below n={n}"
                )
            for x, mult in zip(a, v):
                if interpolant.eval_rep(x) != F.inv(mult):
                    raise BadParameters(
                        "interpolant does not take the value 1/v_i at every point"
                    )
            self._s = interpolant

    def alphas_elems(self) -> List[FieldElement]:
        F = self.field
        return [FieldElement(F, a) for a in self.alphas]

    def multipliers_elems(self) -> List[FieldElement]:
        F = self.field
        return [FieldElement(F, v) for v in self.multipliers]

    # -- cached polynomials ---------------------------------------------------

    def point_poly(self) -> Poly:
        """Monic h with simple roots exactly at the evaluation points."""
        if self._h is None:
            F = self.field
            self._h = Poly.from_roots(F, [F.element(x) for x in self.alphas])
        return self._h

    def multiplier_interpolant(self) -> Poly:
        """The degree < n polynomial with value 1/v_i at alpha_i."""
        if self._s is None:
            F = self.field
            self._s = Poly.interpolate(
                F, list(self.alphas), [F.inv(v) for v in self.multipliers]
            )
        return self._s

    # -- matrices and vectors -------------------------------------------------

    def generator_matrix(self) -> Matrix:
        F = self.field
        rows = []
        row = list(self.multipliers)
        rows.append(list(row))
        for _ in range(1, self.k):
            row = [F.mul(c, x) for c, x in zip(row, self.alphas)]
            rows.append(list(row))
        return Matrix(F, rows, self.n)

    def parity_check_matrix(self) -> Matrix:
        return self.dual().generator_matrix()

    def codeword(self, message: Poly) -> List[int]:
        """Evaluate a message polynomial (degree < k) into a codeword."""
        if message.field is not self.field:
            raise BadParameters("message over a different field")
        if message.degree != float("-inf") and message.degree >= self.k:
            raise BadParameters(
                f"message degree {message.degree} is not below k={self.k}"
            )
        F = self.field
        return [
            F.mul(v, message.eval_rep(x)) for x, v in zip(self.alphas, self.multipliers)
        ]

    def row_space_basis(self) -> Matrix:
        return self.generator_matrix().row_space_basis()

    def contains_vector(self, vec: Sequence[int]) -> bool:
        return self.generator_matrix().row_space_contains(
            Matrix(self.field, [list(vec)], self.n)
        )

    # -- the dual code --------------------------------------------------------

    def dual(self) -> "GrsCode":
        """Same points; multipliers 1/(v_i h'(alpha_i)); dimension n-k."""
        F = self.field
        hp = self.point_poly().derivative()
        w = [
            FieldElement(F, F.inv(F.mul(v, hp.eval_rep(x))))
            for x, v in zip(self.alphas, self.multipliers)
        ]
        return GrsCode(F, self.alphas_elems(), w, self.n - self.k)

    # -- brute force minimum distance ----------------------------------------

    def min_distance_bruteforce(self, limit: int = _BRUTE_DEFAULT_LIMIT) -> int:
        """Minimum weight over all q^k codewords; BudgetExceeded if that
        count is above `limit`."""
        return _min_distance_rows(
            self.field, self.generator_matrix().rows, self.n, limit
        )

    # -- misc -----------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GrsCode):
            return (
                self.field is other.field
                and self.alphas == other.alphas
                and self.multipliers == other.multipliers
                and self.k == other.k
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.alphas, self.multipliers, self.k))

    def __repr__(self):
        return f"GrsCode({self.field.name}, n={self.n}, k={self.k})"

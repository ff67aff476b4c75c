"""Finite field arithmetic for GF(p^m) with p^m <= 2^16.

Elements are represented as integers 0..q-1 encoding the coefficient
vector of the residue polynomial in base p: the element sum(c_i * g^i)
has representation sum(c_i * p^i), where g is the residue of z modulo
the defining polynomial.  Two tables are kept per field:

  * exp/log tables over the chosen multiplicative generator, giving
    O(1) multiplication, division and inversion;
  * for odd p with m >= 2 and small q, a full addition table (otherwise
    addition is XOR for p = 2, plain modular arithmetic for m = 1, and
    digitwise base-p arithmetic as the general fallback).

For the standard small sizes the defining polynomial is taken from a
fixed table of Conway polynomials, so the printed generator powers line
up with the usual computer-algebra conventions.  Every table entry is
re-verified at construction time (irreducibility by trial division and
primitivity of z by an exhaustive order test); other sizes fall back to
the lexicographically least monic irreducible polynomial and the least
primitive element.

Element text format: "0", "1", "g", or "g^e" with 0 <= e <= q-2; prime
fields read and print plain integers instead.  Extension fields also
accept integers 0 <= v < p as prime-subfield constants.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import BadFormat, BadParameters, ExponentRange, NotPrime, UnsupportedSize

MAX_ORDER = 1 << 16

# Conway polynomials, ascending coefficients, for the sizes the golden data
# uses (and their companions up to 2^7).  Each is re-checked at construction;
# a wrong entry cannot go unnoticed.
_CONWAY: dict = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
}

# Full addition tables are built only below this order (memory trade-off);
# every field the heavy algorithms touch is far smaller.
_ADD_TABLE_LIMIT = 1024


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> List[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


class FieldElement:
    """A single element of a Field; a thin wrapper over its integer rep.

    Supports +, -, *, /, **, unary -, ==, hash.  Mixing elements of
    different fields raises BadParameters.
    """

    __slots__ = ("field", "rep")

    def __init__(self, field: "Field", rep: int):
        self.field = field
        self.rep = rep

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise BadParameters(
                    f"cannot mix elements of {self.field.name} and {other.field.name}"
                )
            return other.rep
        if isinstance(other, int):
            return self.field.from_subfield_int(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.rep, r))

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.rep, r))

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(r, self.rep))

    def __mul__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.rep, r))

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.rep, r))

    def __rtruediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(r, self.rep))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.rep))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.rep, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.rep == other.rep
        if isinstance(other, int):
            try:
                return self.rep == self.field.from_subfield_int(other)
            except BadParameters:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.rep))

    def __bool__(self):
        return self.rep != 0

    @property
    def is_zero(self) -> bool:
        return self.rep == 0

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.rep))

    def log(self) -> int:
        """Discrete log to base g; raises on zero."""
        if self.rep == 0:
            raise ZeroDivisionError("zero has no discrete log")
        return self.field.log_table[self.rep]

    def coeffs(self) -> Tuple[int, ...]:
        """Coefficients (c_0, ..., c_{m-1}) of the residue polynomial, base p."""
        return self.field.rep_digits(self.rep)

    def frobenius(self, j: int = 1) -> "FieldElement":
        """x -> x^(p^j)."""
        return FieldElement(self.field, self.field.frobenius(self.rep, j))

    def __str__(self):
        return self.field.format_rep(self.rep)

    def __repr__(self):
        return f"{self.field.name}:{self.field.format_rep(self.rep)}"


class Field:
    """The field GF(p^m), constructed through field_create().

    Attributes
    ----------
    p, m, q : characteristic, extension degree, order p^m
    modulus : ascending coefficients of the defining polynomial (length m+1)
    conway  : True when the modulus came from the built-in Conway table
    name    : "GF(q)"
    exp_table, log_table : generator power tables (exp doubled for modless mul)
    """

    def __init__(self, p: int, m: int, _token=None):
        if _token is not _FIELD_TOKEN:
            raise BadParameters("use field_create(p, m) to obtain Field instances")
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise BadParameters(f"extension degree must be >= 1, got {m}")
        q = p ** m
        if q > MAX_ORDER:
            raise UnsupportedSize(f"field order {q} exceeds {MAX_ORDER}")
        self.p = p
        self.m = m
        self.q = q
        self.name = f"GF({q})"

        if m == 1:
            self.conway = False
            self.modulus: Tuple[int, ...] = (0, 1)  # formally z - 0 shifted; unused
            gen = self._least_primitive_root()
        else:
            table = _CONWAY.get((p, m))
            if table is not None:
                if not self._is_irreducible(table):
                    raise BadParameters(
                        f"builtin modulus for GF({q}) failed the irreducibility check"
                    )
                self.conway = True
                self.modulus = table
                gen = p  # the residue of z
            else:
                self.conway = False
                self.modulus = self._least_irreducible()
                gen = None  # chosen after tables exist

        self.generator_rep: int
        self.exp_table: List[int]
        self.log_table: List[Optional[int]]
        if m == 1:
            self._build_tables_prime(gen)
        else:
            if gen is not None:
                ok = self._build_tables_ext(gen)
                if not ok:
                    raise BadParameters(
                        f"builtin generator for GF({q}) failed the primitivity check"
                    )
            else:
                for cand in range(1, q):
                    if self._build_tables_ext(cand):
                        break
                else:  # pragma: no cover - every finite field has a generator
                    raise BadParameters(f"no primitive element found for GF({q})")

        self._install_row_kernels()
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)

    # -- construction helpers -------------------------------------------------

    def _least_primitive_root(self) -> int:
        p = self.p
        if p == 2:
            return 1
        factors = _prime_factors(p - 1)
        for g in range(2, p):
            if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
                return g
        raise BadParameters(f"no primitive root mod {p}")  # pragma: no cover

    def _poly_mulmod_small(self, a: List[int], b: List[int], mod: Sequence[int]) -> List[int]:
        """Multiply two coefficient lists mod the monic polynomial `mod`, over GF(p)."""
        p = self.p
        deg_mod = len(mod) - 1
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = (out[i + j] + ai * bj) % p
        for i in range(len(out) - 1, deg_mod - 1, -1):
            c = out[i]
            if c:
                out[i] = 0
                for j in range(deg_mod):
                    out[i - deg_mod + j] = (out[i - deg_mod + j] - c * mod[j]) % p
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def _is_irreducible(self, mod: Sequence[int]) -> bool:
        """Trial division by every monic polynomial of degree 1..m//2."""
        p, m = self.p, self.m
        for d in range(1, m // 2 + 1):
            for idx in range(p ** d):
                div = []
                t = idx
                for _ in range(d):
                    div.append(t % p)
                    t //= p
                div.append(1)  # monic
                if self._poly_divides(div, mod):
                    return False
        return True

    def _poly_divides(self, div: Sequence[int], target: Sequence[int]) -> bool:
        p = self.p
        rem = list(target)
        dd = len(div) - 1
        inv_lead = pow(div[-1], p - 2, p)
        while len(rem) - 1 >= dd:
            c = (rem[-1] * inv_lead) % p
            if c:
                off = len(rem) - 1 - dd
                for j in range(dd + 1):
                    rem[off + j] = (rem[off + j] - c * div[j]) % p
            rem.pop()
            while len(rem) > 1 and rem[-1] == 0:
                rem.pop()
            if len(rem) == 1 and rem[0] == 0:
                rem = [0]
                break
        return all(c == 0 for c in rem)

    def _least_irreducible(self) -> Tuple[int, ...]:
        """Lexicographically least monic irreducible of degree m over GF(p).

        Candidates are compared by their coefficient tuple read from the
        highest degree down, i.e. in the order one writes the polynomial.
        """
        p, m = self.p, self.m
        # Digit p^i of idx is coefficient c_i, so ascending idx enumerates the
        # written forms (c_{m-1}, ..., c_0) in lexicographic order.
        for idx in range(p ** m):
            coeffs = []
            t = idx
            for _ in range(m):
                coeffs.append(t % p)
                t //= p
            cand = tuple(coeffs) + (1,)
            if cand[0] == 0:
                continue  # reducible: z divides
            if self._is_irreducible(cand):
                return cand
        raise BadParameters(f"no irreducible polynomial of degree {m} over GF({p})")  # pragma: no cover

    def _build_tables_prime(self, gen: int) -> None:
        p = self.p
        self.generator_rep = gen
        exp = [0] * (2 * (p - 1)) if p > 2 else [1, 1]
        log: List[Optional[int]] = [None] * p
        val = 1
        for i in range(p - 1):
            exp[i] = val
            log[val] = i
            val = (val * gen) % p
        for i in range(p - 1, 2 * (p - 1)):
            exp[i] = exp[i - (p - 1)]
        self.exp_table = exp
        self.log_table = log

    def _build_tables_ext(self, gen: int) -> bool:
        """Build exp/log from candidate generator; False if its order < q-1."""
        q = self.q
        exp = [0] * (2 * (q - 1))
        log: List[Optional[int]] = [None] * q
        gen_digits = self.rep_digits(gen)
        val = [1] + [0] * (self.m - 1)
        for i in range(q - 1):
            rep = 0
            for j in range(self.m - 1, -1, -1):
                rep = rep * self.p + val[j]
            if log[rep] is not None:
                return False  # cycle closed early: not primitive
            exp[i] = rep
            log[rep] = i
            val = self._poly_mulmod_small(val, list(gen_digits), self.modulus)
            val += [0] * (self.m - len(val))
        # full order check: the walk must return to 1 exactly now
        if val[0] != 1 or any(val[1:]):
            return False
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self.exp_table = exp
        self.log_table = log
        self.generator_rep = gen
        return True

    def _install_row_kernels(self) -> None:
        """Bind the scalar ops and row kernels specialized to this field's kind."""
        p, m, q = self.p, self.m, self.q
        if m == 1:
            self._kind = "prime"
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.neg = lambda a: (-a) % p
        elif p == 2:
            self._kind = "char2"
            self.add = lambda a, b: a ^ b
            self.sub = self.add
            self.neg = lambda a: a
        else:
            digits = self.rep_digits
            undigits = self._digits_rep
            if q <= _ADD_TABLE_LIMIT:
                self._kind = "oddext_table"
                tbl = []
                for a in range(q):
                    da = digits(a)
                    row = []
                    for b in range(q):
                        db = digits(b)
                        row.append(undigits(tuple((x + y) % p for x, y in zip(da, db))))
                    tbl.append(row)
                self._add_table = tbl
                neg_tbl = [undigits(tuple((-x) % p for x in digits(a))) for a in range(q)]
                self._neg_table = neg_tbl
                self.add = lambda a, b: tbl[a][b]
                self.neg = lambda a: neg_tbl[a]
                self.sub = lambda a, b: tbl[a][neg_tbl[b]]
            else:
                self._kind = "oddext_big"
                self.add = lambda a, b: undigits(
                    tuple((x + y) % p for x, y in zip(digits(a), digits(b)))
                )
                self.neg = lambda a: undigits(tuple((-x) % p for x in digits(a)))
                self.sub = lambda a, b: self.add(a, self.neg(b))

        exp = self.exp_table
        log = self.log_table

        def row_scale(row: Sequence[int], c: int) -> List[int]:
            """New list with every entry of `row` multiplied by the rep `c`."""
            if c == 0:
                return [0] * len(row)
            lc = log[c]
            return [exp[lc + log[b]] if b else 0 for b in row]

        self.row_scale = row_scale

        # row_submul(row, prow, c) == row - c*prow, the elimination step.
        if m == 1:

            def row_submul(row, prow, c):
                if c == 0:
                    return list(row)
                return [(a - c * b) % p for a, b in zip(row, prow)]

            def dot(u, v):
                return sum(a * b for a, b in zip(u, v)) % p

        elif p == 2:

            def row_submul(row, prow, c):
                if c == 0:
                    return list(row)
                lc = log[c]
                return [a ^ exp[lc + log[b]] if b else a for a, b in zip(row, prow)]

            def dot(u, v):
                acc = 0
                for a, b in zip(u, v):
                    if a and b:
                        acc ^= exp[log[a] + log[b]]
                return acc

        elif self._kind == "oddext_table":
            add_tbl = self._add_table
            neg_tbl = self._neg_table

            def row_submul(row, prow, c):
                if c == 0:
                    return list(row)
                lnc = log[neg_tbl[c]]
                return [add_tbl[a][exp[lnc + log[b]]] if b else a for a, b in zip(row, prow)]

            def dot(u, v):
                acc = 0
                for a, b in zip(u, v):
                    if a and b:
                        acc = add_tbl[acc][exp[log[a] + log[b]]]
                return acc

        else:
            sub_fn = self.sub
            mul_fn = self.mul
            add_fn = self.add

            def row_submul(row, prow, c):
                if c == 0:
                    return list(row)
                return [sub_fn(a, mul_fn(c, b)) if b else a for a, b in zip(row, prow)]

            def dot(u, v):
                acc = 0
                for a, b in zip(u, v):
                    if a and b:
                        acc = add_fn(acc, mul_fn(a, b))
                return acc

        self.row_submul = row_submul
        self.dot = dot

    # -- scalar arithmetic on reps --------------------------------------------

    def rep_digits(self, rep: int) -> Tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(rep % p)
            rep //= p
        return tuple(out)

    def _digits_rep(self, digits: Sequence[int]) -> int:
        rep = 0
        for d in reversed(digits):
            rep = rep * self.p + d
        return rep

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[self.log_table[a] + self.log_table[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp_table[self.q - 1 - self.log_table[a]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if a == 0:
            return 0
        return self.exp_table[self.log_table[a] - self.log_table[b] + (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self.exp_table[(self.log_table[a] * e) % (self.q - 1)]

    def frobenius(self, rep: int, j: int = 1) -> int:
        return self.pow(rep, self.p ** (j % self.m))

    def is_square(self, rep: int) -> bool:
        """Quadratic residue test; zero counts as a square."""
        if rep == 0:
            return True
        if self.p == 2:
            return True
        return self.log_table[rep] % 2 == 0

    def sqrt(self, rep: int) -> int:
        """A square root of rep; raises BadParameters for non-squares (odd q)."""
        if rep == 0:
            return 0
        if self.p == 2:
            return self.pow(rep, self.q // 2)
        lg = self.log_table[rep]
        if lg % 2:
            raise BadParameters(f"{self.format_rep(rep)} is not a square in {self.name}")
        return self.exp_table[lg // 2]

    # -- element constructors --------------------------------------------------

    def element(self, rep: int) -> FieldElement:
        if not 0 <= rep < self.q:
            raise BadParameters(f"rep {rep} outside 0..{self.q - 1}")
        return FieldElement(self, rep)

    def from_subfield_int(self, v: int) -> int:
        """Rep of an integer constant: any int mod p (prime field), 0 <= v < p otherwise."""
        if self.m == 1:
            return v % self.p
        if 0 <= v < self.p:
            return v
        raise BadParameters(
            f"integer {v} is not a prime-subfield constant of {self.name}"
        )

    def gen_pow(self, e: int) -> FieldElement:
        """g^e with e reduced mod q-1 (negative e welcome)."""
        return FieldElement(self, self.exp_table[e % (self.q - 1)])

    def elements(self) -> Iterator[FieldElement]:
        for rep in range(self.q):
            yield FieldElement(self, rep)

    # -- text format ------------------------------------------------------------

    def format_rep(self, rep: int) -> str:
        if rep == 0:
            return "0"
        if self.m == 1:
            return str(rep)
        e = self.log_table[rep]
        if e == 0:
            return "1"
        if e == 1:
            return "g"
        return f"g^{e}"

    _ELEM_RE = re.compile(r"^(?:(-?\d+)|g(?:\^(-?\d+))?)$")

    def element_from_string(self, text: str) -> FieldElement:
        """Parse "0", "1", "g", "g^e" (0 <= e <= q-2), or an integer constant."""
        s = text.strip()
        mobj = self._ELEM_RE.match(s)
        if not mobj:
            raise BadFormat(f"cannot parse {text!r} as an element of {self.name}")
        intpart, exppart = mobj.groups()
        if intpart is not None:
            try:
                return FieldElement(self, self.from_subfield_int(int(intpart)))
            except BadParameters as exc:
                raise BadFormat(str(exc)) from exc
        e = 1 if exppart is None else int(exppart)
        if not 0 <= e <= self.q - 2:
            raise ExponentRange(
                f"exponent {e} outside 0..{self.q - 2} for {self.name}"
            )
        return FieldElement(self, self.exp_table[e])

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        if isinstance(other, Field):
            return self.p == other.p and self.m == other.m and self.modulus == other.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))


_FIELD_TOKEN = object()


@lru_cache(maxsize=None)
def _field_cached(p: int, m: int) -> Field:
    return Field(p, m, _token=_FIELD_TOKEN)


def field_create(p: int, m: int = 1) -> Field:
    """The field GF(p^m).  Instances are cached: same (p, m) -> same object."""
    if not isinstance(p, int) or not isinstance(m, int):
        raise BadParameters("p and m must be integers")
    return _field_cached(p, m)


def field_of_order(q: int) -> Field:
    """The field GF(q) for a prime power q (factored here)."""
    if q < 2:
        raise BadParameters(f"field order must be >= 2, got {q}")
    p = min(_prime_factors(q))
    m = 0
    t = q
    while t % p == 0 and t > 1:
        t //= p
        m += 1
    if t != 1:
        raise NotPrime(f"{q} is not a prime power")
    return field_create(p, m)

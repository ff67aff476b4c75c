"""Dense univariate polynomials over a Field.

Coefficients are stored ascending (index = degree) as integer reps with
trailing zeros stripped, so the zero polynomial is the empty tuple and
``degree`` of zero is ``NEG_INF`` (not -1): degree inequalities like
deg(fg) = deg f + deg g then hold without special cases.

Text format, produced by str() and consumed by parse(): terms in
descending degree joined by " + ", each term "c*z^k", with the obvious
abbreviations ("z^k" for coefficient one, "z" for degree one, a bare
element for the constant term).  parse() additionally accepts "-" as a
term separator (negating the following term) and is whitespace-tolerant.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import BadFormat, BadParameters
from .gf import Field, FieldElement

NEG_INF = float("-inf")

Degree = Union[int, float]  # an int, or NEG_INF for the zero polynomial


class Poly:
    """Immutable polynomial; arithmetic stays within one field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        q = field.q
        for c in cs:
            if not 0 <= c < q:
                raise BadParameters(f"coefficient rep {c} outside 0..{q - 1}")
        self.field = field
        self.coeffs: Tuple[int, ...] = tuple(cs)

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(field: Field) -> "Poly":
        return Poly(field, ())

    @staticmethod
    def one(field: Field) -> "Poly":
        return Poly(field, (1,))

    @staticmethod
    def variable(field: Field) -> "Poly":
        """The monomial z."""
        return Poly(field, (0, 1))

    @staticmethod
    def constant(field: Field, value: Union[FieldElement, int]) -> "Poly":
        if isinstance(value, FieldElement):
            if value.field is not field:
                raise BadParameters("constant from a different field")
            return Poly(field, (value.rep,))
        return Poly(field, (field.from_subfield_int(value),))

    @staticmethod
    def from_elements(field: Field, elems: Sequence[Union[FieldElement, int]]) -> "Poly":
        """Ascending coefficients given as elements or subfield ints."""
        reps = []
        for e in elems:
            if isinstance(e, FieldElement):
                if e.field is not field:
                    raise BadParameters("coefficient from a different field")
                reps.append(e.rep)
            else:
                reps.append(field.from_subfield_int(e))
        return Poly(field, reps)

    @staticmethod
    def from_roots(field: Field, roots: Sequence[Union[FieldElement, int]]) -> "Poly":
        """Monic product of (z - r) over the given roots (with multiplicity)."""
        out = [1]
        for r in roots:
            rr = r.rep if isinstance(r, FieldElement) else field.from_subfield_int(r)
            neg_r = field.neg(rr)
            nxt = [0] * (len(out) + 1)
            for i, c in enumerate(out):
                if c:
                    nxt[i + 1] = field.add(nxt[i + 1], c)
                    nxt[i] = field.add(nxt[i], field.mul(c, neg_r))
            out = nxt
        return Poly(field, out)

    @staticmethod
    def interpolate(field: Field, xs: Sequence[int], ys: Sequence[int]) -> "Poly":
        """Lagrange interpolation through (xs[i], ys[i]); reps, distinct xs.

        Returns the unique polynomial of degree < len(xs) through the points.
        """
        if len(xs) != len(ys):
            raise BadParameters("interpolation needs as many values as nodes")
        if len(set(xs)) != len(xs):
            raise BadParameters("interpolation nodes must be distinct")
        n = len(xs)
        if n == 0:
            return Poly.zero(field)
        master = Poly.from_roots(field, [field.element(x) for x in xs])
        acc = [0] * n
        for xi, yi in zip(xs, ys):
            if yi == 0:
                continue
            # master / (z - xi) by synthetic division, degree n-1
            quot = [0] * n
            carry = 0
            for j in range(n, 0, -1):
                carry = field.add(master.coeffs[j], field.mul(carry, xi))
                quot[j - 1] = carry
            denom = 0  # quot evaluated at xi equals prod_{j != i} (xi - xj)
            for c in reversed(quot):
                denom = field.add(field.mul(denom, xi), c)
            scale = field.div(yi, denom)
            for j in range(n):
                if quot[j]:
                    acc[j] = field.add(acc[j], field.mul(scale, quot[j]))
        return Poly(field, acc)

    # -- basic queries --------------------------------------------------------

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        """Rep of the degree-i coefficient (0 beyond the degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def coeff_elem(self, i: int) -> FieldElement:
        return FieldElement(self.field, self.coeff(i))

    def lead(self) -> FieldElement:
        if not self.coeffs:
            raise BadParameters("the zero polynomial has no leading coefficient")
        return FieldElement(self.field, self.coeffs[-1])

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field is other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic -----------------------------------------------------------

    def _check_same(self, other: "Poly") -> None:
        if self.field is not other.field:
            raise BadParameters("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_same(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_same(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = [
            F.sub(self.coeff(i), other.coeff(i))
            for i in range(n)
        ]
        return Poly(F, out)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_same(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly(F, out)

    def scale(self, c: Union[FieldElement, int]) -> "Poly":
        """Multiply by a scalar."""
        F = self.field
        rep = c.rep if isinstance(c, FieldElement) else F.from_subfield_int(c)
        if rep == 0:
            return Poly.zero(F)
        return Poly(F, F.row_scale(list(self.coeffs), rep))

    def shift(self, k: int) -> "Poly":
        """Multiply by z^k (k >= 0)."""
        if k < 0:
            raise BadParameters("shift wants k >= 0")
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise BadParameters("negative polynomial power")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        self._check_same(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        d = len(other.coeffs) - 1
        inv_lead = F.inv(other.coeffs[-1])
        rem = list(self.coeffs)
        if len(rem) <= d:
            return Poly.zero(F), self
        quot = [0] * (len(rem) - d)
        for top in range(len(rem) - 1, d - 1, -1):
            c = rem[top]
            if c:
                c = F.mul(c, inv_lead)
                quot[top - d] = c
                for j in range(d + 1):
                    rem[top - d + j] = F.sub(rem[top - d + j], F.mul(c, other.coeffs[j]))
        return Poly(F, quot), Poly(F, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        if self.coeffs[-1] == 1:
            return self
        F = self.field
        inv_lead = F.inv(self.coeffs[-1])
        return Poly(F, [F.mul(c, inv_lead) for c in self.coeffs])

    def derivative(self) -> "Poly":
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(F.mul(self.coeffs[i], i % F.p))
        return Poly(F, out)

    # -- evaluation -----------------------------------------------------------

    def eval_rep(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def __call__(self, x: Union[FieldElement, int]) -> FieldElement:
        F = self.field
        if isinstance(x, FieldElement):
            if x.field is not F:
                raise BadParameters("evaluation point from a different field")
            rep = x.rep
        else:
            rep = F.from_subfield_int(x)
        return FieldElement(F, self.eval_rep(rep))

    # -- text -----------------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        F = self.field
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = F.format_rep(c)
            if i == 0:
                terms.append(cs)
            else:
                var = "z" if i == 1 else f"z^{i}"
                terms.append(var if cs == "1" else f"{cs}*{var}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self.field.name}, {self})"

    @staticmethod
    def parse(field: Field, text: str) -> "Poly":
        """Inverse of str(); also accepts "-" separators and loose spacing."""
        s = text.strip()
        if not s:
            raise BadFormat("empty polynomial text")
        # split into signed terms at top level + / -
        terms: List[Tuple[int, str]] = []  # (sign, term text)
        sign = 1
        buf = []
        for ch in s:
            if ch in "+-":
                if buf and "".join(buf).strip():
                    terms.append((sign, "".join(buf).strip()))
                    buf = []
                    sign = 1 if ch == "+" else -1
                elif not terms and not "".join(buf).strip():
                    sign = sign * (1 if ch == "+" else -1)  # leading sign
                else:
                    raise BadFormat(f"misplaced {ch!r} in polynomial {text!r}")
            else:
                buf.append(ch)
        last = "".join(buf).strip()
        if not last:
            raise BadFormat(f"dangling sign in polynomial {text!r}")
        terms.append((sign, last))

        acc = [0] * 1
        for sg, term in terms:
            coef_txt, _, var_txt = term.partition("z")
            coef_txt = coef_txt.strip()
            if coef_txt.endswith("*"):
                coef_txt = coef_txt[:-1].strip()
            if "z" in var_txt:
                raise BadFormat(f"cannot parse term {term!r}")
            if "*" in var_txt or "*" in coef_txt:
                raise BadFormat(f"cannot parse term {term!r}")
            if "z" in term:
                var_txt = var_txt.strip()
                if var_txt == "":
                    k = 1
                elif var_txt.startswith("^"):
                    try:
                        k = int(var_txt[1:].strip())
                    except ValueError:
                        raise BadFormat(f"bad exponent in term {term!r}") from None
                    if k < 0:
                        raise BadFormat(f"negative exponent in term {term!r}")
                else:
                    raise BadFormat(f"cannot parse term {term!r}")
                coef = field.element_from_string(coef_txt) if coef_txt else field.one
            else:
                if not coef_txt:
                    raise BadFormat(f"cannot parse term {term!r}")
                k = 0
                coef = field.element_from_string(coef_txt)
            rep = coef.rep if sg == 1 else field.neg(coef.rep)
            if k >= len(acc):
                acc.extend([0] * (k + 1 - len(acc)))
            acc[k] = field.add(acc[k], rep)
        return Poly(field, acc)

    # -- square root up to a scalar ------------------------------------------

    def scaled_square_root(self) -> Optional[Tuple[FieldElement, "Poly"]]:
        """Write self as lam * s**2 with s monic, if possible.

        Returns (lam, s), the unique such pair, or None when self is not a
        scalar multiple of a square.  The zero polynomial returns None.
        """
        F = self.field
        deg = self.degree
        if self.is_zero or deg % 2:
            return None
        r = deg // 2
        lam = self.coeffs[-1]
        wm = self.monic().coeffs  # degree 2r, monic
        if F.p == 2:
            # squaring is the Frobenius: only even-degree terms may appear
            if any(wm[i] for i in range(1, len(wm), 2)):
                return None
            half = F.q // 2
            s = [F.pow(wm[2 * i], half) for i in range(r + 1)]
            cand = Poly(F, s)
        else:
            # top-down coefficient matching: the z^{r+i} coefficient of s**2
            # is 2*s_i plus products of already-known higher coefficients
            inv2 = F.inv(2)
            s = [0] * (r + 1)
            s[r] = 1
            for i in range(r - 1, -1, -1):
                tot = wm[r + i]
                for a in range(i + 1, r):
                    tot = F.sub(tot, F.mul(s[a], s[r + i - a]))
                s[i] = F.mul(tot, inv2)
            cand = Poly(F, s)
        if (cand * cand).coeffs != tuple(wm):
            return None
        return FieldElement(F, lam), cand


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero polynomial if both are zero)."""
    if a.field is not b.field:
        raise BadParameters("gcd over different fields")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def lcm(a: Poly, b: Poly) -> Poly:
    """Monic least common multiple (zero polynomial if either is zero)."""
    if a.is_zero or b.is_zero:
        return Poly.zero(a.field)
    return ((a * b) // gcd(a, b)).monic()


def pow_mod(base: Poly, e: int, mod: Poly) -> Poly:
    """base**e reduced mod `mod` (square-and-multiply)."""
    if e < 0:
        raise BadParameters("negative exponent in pow_mod")
    if mod.is_zero:
        raise ZeroDivisionError("pow_mod by the zero polynomial")
    result = Poly.one(base.field) % mod
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def splits_into_distinct_linear_factors(f: Poly) -> bool:
    """True when f is nonzero and a product of distinct (z - a) factors,
    i.e. f divides z^q - z."""
    if f.is_zero:
        return False
    if f.degree == 0:
        return True
    F = f.field
    zq = pow_mod(Poly.variable(F), F.q, f)
    reduced = (zq - Poly.variable(F)) % f
    return reduced.is_zero

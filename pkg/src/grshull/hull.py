"""Euclidean hulls of generalized Reed-Solomon codes.

The hull of a code C is C intersected with its dual.  Three independent
routes compute it here:

  * an oracle: plain linear algebra on generator matrices, done twice
    (nullspace of the stacked generators, and row-space intersection)
    with the two answers compared;
  * a closed form: inside two degree windows the hull is itself a code
    of the same evaluation type, written down directly from d = gcd(s, t);
  * structured matrices: outside the windows, a coefficient system (A|B)
    built from s, t and d gives the dimension by rank, and incremental
    elimination extracts explicit basis vectors with verified
    polynomial witnesses.

Throughout, for a code on points alpha_i with multipliers v_i:
h is the monic polynomial with the points as simple roots, s is the
degree < n interpolant of 1/v_i, t the degree < n interpolant of
v_i * h'(alpha_i), and s*t = u*h + h' exactly.  epsilon is deg u with
the convention epsilon = -1 when u = 0; mu = deg s, nu = deg t,
delta = deg gcd(s, t).  mu + nu = n + epsilon always.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    InternalInconsistency,
    NegativeGamma,
    OracleDisagreement,
    TheoremViolation,
    WitnessVerificationFailed,
)
from .gf import Field, FieldElement
from .grs import GrsCode
from .linalg import Matrix
from .poly import Poly, gcd as poly_gcd, lcm as poly_lcm


class HullCase(Enum):
    """Which computation applies, decided by exact integer comparisons."""

    CLOSED_FORM_LOW = "ClosedFormLow"
    CLOSED_FORM_HIGH = "ClosedFormHigh"
    MATRIX_LOW = "MatrixLow"
    MATRIX_HIGH = "MatrixHigh"


class Classification(Enum):
    LCD = "LCD"
    SELF_ORTHOGONAL = "SelfOrthogonal"
    DUAL_CONTAINING = "DualContaining"
    SELF_DUAL = "SelfDual"
    GENERIC = "Generic"


@dataclass(frozen=True)
class HullSetup:
    """Everything derived from a code that the hull computations consume.

    gamma and gamma_prime can be negative; the case tag tells which (if
    either) is actually used.
    """

    code: GrsCode
    t: Poly
    u: Poly
    epsilon: int
    d: Poly
    l: Poly
    mu: int
    nu: int
    delta: int
    gamma: int
    gamma_prime: int
    case: HullCase

    @property
    def s(self) -> Poly:
        return self.code.multiplier_interpolant()

    @property
    def low_side(self) -> bool:
        """True when 2*mu < 2*k + epsilon (the side that uses gamma)."""
        return 2 * self.mu < 2 * self.code.k + self.epsilon


def hull_setup(code: GrsCode) -> HullSetup:
    """Derive t, u, epsilon, d, l and the case tag for a code."""
    F = code.field
    n, k = code.n, code.k
    h = code.point_poly()
    hp = h.derivative()
    s = code.multiplier_interpolant()
    t = Poly.interpolate(
        F,
        list(code.alphas),
        [F.mul(v, hp.eval_rep(a)) for a, v in zip(code.alphas, code.multipliers)],
    )
    u, rem = divmod(s * t - hp, h)
    if not rem.is_zero:
        raise InternalInconsistency(
            "s*t - h' is not divisible by h; the polynomial layer is broken"
        )
    epsilon = -1 if u.is_zero else int(u.degree)
    mu, nu = int(s.degree), int(t.degree)
    if mu + nu != n + epsilon:
        raise InternalInconsistency(
            f"deg s + deg t = {mu + nu} differs from n + epsilon = {n + epsilon}"
        )
    if epsilon > n - 2:
        raise InternalInconsistency(f"deg u = {epsilon} exceeds n - 2 = {n - 2}")
    d = poly_gcd(s, t)
    delta = int(d.degree)
    gamma = k + epsilon - mu - delta - 1
    gamma_prime = mu - k - delta - 1

    # window tests; the epsilon/2 boundary is decided by doubling, never floats
    low_window = (k + epsilon - delta - 1 < mu) and (2 * mu < 2 * k + epsilon)
    high_window = (2 * mu >= 2 * k + epsilon) and (mu < k + delta + 1)
    guard = 2 * delta + 2 > epsilon  # implied by either window; checked anyway
    if low_window and guard:
        case = HullCase.CLOSED_FORM_LOW
    elif high_window and guard:
        case = HullCase.CLOSED_FORM_HIGH
    elif 2 * mu < 2 * k + epsilon:
        case = HullCase.MATRIX_LOW
    else:
        case = HullCase.MATRIX_HIGH

    return HullSetup(
        code=code,
        t=t,
        u=u,
        epsilon=epsilon,
        d=d,
        l=poly_lcm(s, t),
        mu=mu,
        nu=nu,
        delta=delta,
        gamma=gamma,
        gamma_prime=gamma_prime,
        case=case,
    )


# --------------------------------------------------------------------------
# oracle


def hull_oracle(code: GrsCode) -> Matrix:
    """Canonical hull basis by two independent linear-algebra routes.

    Route one: the hull is the dual of (code + dual), i.e. the nullspace
    of the stacked generator matrices.  Route two: direct row-space
    intersection of the two generators.  Both are computed and compared.
    """
    G = code.generator_matrix()
    H = code.dual().generator_matrix()
    by_nullspace = G.stack(H).nullspace()
    by_intersection = G.row_space_intersect(H)
    if not by_nullspace.row_space_equal(by_intersection):
        raise OracleDisagreement(
            f"nullspace route gives dimension {by_nullspace.nrows}, "
            f"intersection route {by_intersection.nrows} with a different span"
        )
    return by_intersection  # already in canonical reduced form


# --------------------------------------------------------------------------
# closed form


@dataclass(frozen=True)
class ClosedFormHull:
    """The hull written down directly: a code of the same evaluation type
    with weights 1/d(alpha_i), or the zero code when the window dimension
    comes out non-positive (`code` is then None and `basis` has no rows)."""

    dimension: int
    code: Optional[GrsCode]
    basis: Matrix


def hull_closed_form(setup: HullSetup) -> Optional[ClosedFormHull]:
    """Explicit hull in the two closed-form cases; None otherwise."""
    if setup.case not in (HullCase.CLOSED_FORM_LOW, HullCase.CLOSED_FORM_HIGH):
        return None
    code = setup.code
    F = code.field
    k = code.k
    if setup.case is HullCase.CLOSED_FORM_LOW:
        dim = setup.delta + setup.mu - k - setup.epsilon
    else:
        dim = setup.delta + k - setup.mu
    if dim <= 0:
        return ClosedFormHull(0, None, Matrix.zero_rows(F, code.n))
    weights = []
    for a in code.alphas:
        val = setup.d.eval_rep(a)
        if val == 0:  # impossible: d divides s and s has no roots at the points
            raise InternalInconsistency("gcd(s, t) vanishes at an evaluation point")
        weights.append(FieldElement(F, F.inv(val)))
    hull_code = GrsCode(F, code.alphas_elems(), weights, dim)
    return ClosedFormHull(dim, hull_code, hull_code.generator_matrix())


# --------------------------------------------------------------------------
# structured matrices


def _assemble_columns(setup: HullSetup) -> Tuple[List[List[int]], List[List[int]], int, int]:
    """Columns of A and B (as vectors), the height, and gamma_used.

    Shared by build_system and the basis algorithm; performs no
    negativity check so the closed-form cases can still be inspected.
    """
    code = setup.code
    n, k = code.n, code.k
    s, t, d = setup.s, setup.t, setup.d
    if setup.low_side:
        height = setup.nu + k  # equals n + epsilon + k - mu
        gamma_used = setup.gamma
    else:
        height = n + setup.mu - k
        gamma_used = setup.gamma_prime

    def col_of(p: Poly) -> List[int]:
        if len(p.coeffs) > height:
            raise InternalInconsistency(
                f"column of degree {p.degree} does not fit height {height}"
            )
        return list(p.coeffs) + [0] * (height - len(p.coeffs))

    a_cols = [col_of(t.shift(j)) for j in range(k)]
    a_cols += [col_of(s.shift(j)) for j in range(n - k)]
    dh = d * code.point_poly()
    b_cols = [col_of(dh.shift(i)) for i in range(gamma_used + 1)] if gamma_used >= 0 else []
    if gamma_used >= 0 and len(dh.coeffs) + gamma_used != height:
        raise InternalInconsistency("shifted-column block does not exactly fill the height")
    return a_cols, b_cols, height, gamma_used


def _cols_to_matrix(F: Field, cols: Sequence[Sequence[int]], height: int) -> Matrix:
    return Matrix(F, [[c[r] for c in cols] for r in range(height)], len(cols))


def build_system(setup: HullSetup) -> Tuple[Matrix, Matrix, int]:
    """The coefficient system (A, B, gamma_used) for the matrix method.

    A has n columns: the first k hold ascending coefficients of t*z^j,
    the rest coefficients of s*z^j; B holds gamma_used + 1 copies of
    d*h, each shifted one row further down.  Raises NegativeGamma when
    gamma_used < 0 (which happens exactly inside the closed-form
    windows, where this system is not needed).
    """
    a_cols, b_cols, height, gamma_used = _assemble_columns(setup)
    if gamma_used < 0:
        raise NegativeGamma(
            f"gamma = {gamma_used} < 0: no shifted columns; the matrix method "
            "does not apply (closed-form window)"
        )
    F = setup.code.field
    return (
        _cols_to_matrix(F, a_cols, height),
        _cols_to_matrix(F, b_cols, height),
        gamma_used,
    )


def hull_dimension_formula(setup: HullSetup) -> int:
    """Hull dimension as n + gamma_used + 1 - rank(A|B); 0 when the
    shifted-column count is negative."""
    gamma_used = setup.gamma if setup.low_side else setup.gamma_prime
    if gamma_used < 0:
        return 0
    A, B, gamma_used = build_system(setup)
    rank = A.augment(B).rank()
    return setup.code.n + gamma_used + 1 - rank


@dataclass(frozen=True)
class DependencyWitness:
    """One linear dependency of a B column on its predecessors, read back
    as polynomials: f*t - g*s = rbar*d*h with deg f <= k-1,
    deg g <= n-k-1, and deg rbar equal to the B column's shift index.
    Witnesses are normalized so f is monic."""

    rbar: Poly
    f: Poly
    g: Poly

    def hull_vector(self, setup: HullSetup) -> List[int]:
        """The hull element (f(alpha_i)/s(alpha_i))_i this witness certifies."""
        code = setup.code
        F = code.field
        return [
            F.mul(self.f.eval_rep(a), v)
            for a, v in zip(code.alphas, code.multipliers)
        ]


def hull_basis_algorithm(setup: HullSetup) -> Tuple[List[DependencyWitness], Matrix]:
    """Explicit hull basis by incremental column elimination.

    The n columns of A are eliminated first (they must be independent);
    the B columns follow in shift order.  Every B column that becomes
    dependent yields a DependencyWitness, re-verified by polynomial
    arithmetic, and one hull basis vector.
    """
    code = setup.code
    F = code.field
    n, k = code.n, code.k
    a_cols, b_cols, height, gamma_used = _assemble_columns(setup)
    if gamma_used < 0:
        raise NegativeGamma(
            f"gamma = {gamma_used} < 0: the basis algorithm applies only to "
            "the matrix cases"
        )

    # reducers: (pivot row, normalized column, expression over original columns)
    reducers: List[Tuple[int, List[int], Dict[int, int]]] = []

    def reduce_column(idx: int, col: Sequence[int]) -> Tuple[List[int], Dict[int, int]]:
        vec = list(col)
        expr: Dict[int, int] = {idx: 1}
        for pr, rvec, rexpr in reducers:
            coef = vec[pr]
            if coef:
                vec = F.row_submul(vec, rvec, coef)
                for j, x in rexpr.items():
                    expr[j] = F.sub(expr.get(j, 0), F.mul(coef, x))
        return vec, expr

    def keep(vec: List[int], expr: Dict[int, int]) -> None:
        pivot = next(i for i, x in enumerate(vec) if x)
        ip = F.inv(vec[pivot])
        vec = F.row_scale(vec, ip)
        reducers.append((pivot, vec, {j: F.mul(x, ip) for j, x in expr.items() if x}))

    for idx, col in enumerate(a_cols):
        vec, expr = reduce_column(idx, col)
        if not any(vec):
            raise TheoremViolation(
                "the unshifted coefficient columns are linearly dependent "
                "(their rank must be n)"
            )
        keep(vec, expr)

    witnesses: List[DependencyWitness] = []
    vectors: List[List[int]] = []
    s, t, d = setup.s, setup.t, setup.d
    dh = d * code.point_poly()
    for i, col in enumerate(b_cols):
        idx = n + i
        vec, expr = reduce_column(idx, col)
        if any(vec):
            keep(vec, expr)
            continue
        # dependency: sum expr[j] * column_j = 0 with expr[idx] = 1.
        # Columns n..n+i are d*h*z^j, columns < n are t*z^j / s*z^j, so
        # rbar*d*h = -(sum over A columns) = f*t - g*s.
        rbar_coeffs = [0] * (i + 1)
        f_coeffs = [0] * k
        g_coeffs = [0] * (n - k)
        for j, x in expr.items():
            if not x:
                continue
            if j >= n:
                rbar_coeffs[j - n] = x
            elif j < k:
                f_coeffs[j] = F.neg(x)
            else:
                g_coeffs[j - k] = x
        rbar = Poly(F, rbar_coeffs)
        f = Poly(F, f_coeffs)
        g = Poly(F, g_coeffs)
        if f.is_zero:
            raise WitnessVerificationFailed(
                "dependency produced f = 0; the certified hull vector would vanish"
            )
        # normalize the whole identity so f is monic
        scale = F.inv(f.coeffs[-1])
        rbar, f, g = rbar.scale(scale), f.scale(scale), g.scale(scale)
        if f * t - g * s != rbar * dh:
            raise WitnessVerificationFailed(
                "f*t - g*s does not equal rbar*d*h for an extracted dependency"
            )
        if rbar.degree != i:
            raise WitnessVerificationFailed(
                f"dependency at shift {i} read back degree {rbar.degree}"
            )
        w = DependencyWitness(rbar=rbar, f=f, g=g)
        hv = w.hull_vector(setup)
        # the same vector through the dual's description: g(alpha)/t(alpha)
        for a, x in zip(code.alphas, hv):
            tv = t.eval_rep(a)
            if F.div(g.eval_rep(a), tv) != x:
                raise WitnessVerificationFailed(
                    "witness hull vector differs between its two descriptions"
                )
        witnesses.append(w)
        vectors.append(hv)

    basis = Matrix(F, vectors, n)
    if basis.rank() != len(vectors):
        raise WitnessVerificationFailed("extracted hull vectors are not independent")
    return witnesses, basis


# --------------------------------------------------------------------------
# classification


def classify(
    code: GrsCode,
    setup: Optional[HullSetup] = None,
    oracle_basis: Optional[Matrix] = None,
) -> Classification:
    """Ground-truth classification from the oracle hull, with the
    sufficient closed-form conditions layered on top as assertions
    (TheoremViolation if one of them is contradicted — never expected)."""
    if setup is None:
        setup = hull_setup(code)
    if oracle_basis is None:
        oracle_basis = hull_oracle(code)
    dim = oracle_basis.nrows
    code_basis = code.generator_matrix().row_space_basis()
    dual_basis = code.dual().generator_matrix().row_space_basis()

    if dim == 0:
        result = Classification.LCD
    else:
        eq_code = oracle_basis == code_basis
        eq_dual = oracle_basis == dual_basis
        if eq_code and eq_dual:
            result = Classification.SELF_DUAL
        elif eq_code:
            result = Classification.SELF_ORTHOGONAL
        elif eq_dual:
            result = Classification.DUAL_CONTAINING
        else:
            result = Classification.GENERIC

    n, k = code.n, code.k
    if setup.case is HullCase.CLOSED_FORM_HIGH:
        if setup.d == setup.s.monic():
            if n == 2 * k:
                if result is not Classification.SELF_DUAL:
                    raise TheoremViolation(
                        f"high window with gcd(s,t) ~ s and n = 2k promises "
                        f"self-dual; oracle says {result.value}"
                    )
            elif result not in (
                Classification.SELF_ORTHOGONAL,
                Classification.SELF_DUAL,
            ):
                raise TheoremViolation(
                    f"high window with gcd(s,t) ~ s promises self-orthogonal; "
                    f"oracle says {result.value}"
                )
        if setup.delta + k - setup.mu == 0 and result is not Classification.LCD:
            raise TheoremViolation(
                f"high window at boundary gap 1 promises LCD; oracle says {result.value}"
            )
    elif setup.case is HullCase.CLOSED_FORM_LOW:
        if setup.d == setup.t.monic() and result not in (
            Classification.DUAL_CONTAINING,
            Classification.SELF_DUAL,
        ):
            raise TheoremViolation(
                f"low window with gcd(s,t) ~ t promises dual-containing; "
                f"oracle says {result.value}"
            )
        if (
            setup.delta + setup.mu - k - setup.epsilon == 0
            and result is not Classification.LCD
        ):
            raise TheoremViolation(
                f"low window at boundary gap 1 promises LCD; oracle says {result.value}"
            )
    return result


# --------------------------------------------------------------------------
# GRS certification of the hull


def certify_grs(
    setup: HullSetup,
    basis: Matrix,
    closed: Optional[ClosedFormHull],
    enumeration_limit: int = 1 << 20,
) -> Tuple[Optional[bool], Optional[GrsCode], str]:
    """Decide, when possible, whether the hull is itself a code of the
    evaluation type.  Three-valued: (True, witness, why) / (False, None,
    why) / (None, None, why-undecided)."""
    from .grs import _min_distance_rows

    code = setup.code
    F = code.field
    n = code.n
    dim = basis.nrows
    if dim == 0:
        return None, None, "zero hull: the question does not arise"
    if closed is not None and closed.code is not None:
        return True, closed.code, "closed-form window: written as an evaluation code"
    if dim == 1:
        row = basis.rows[0]
        if all(row):
            witness = GrsCode(
                F,
                code.alphas_elems(),
                [FieldElement(F, x) for x in row],
                1,
            )
            return True, witness, "dimension 1 with an everywhere-nonzero generator"
        return (
            False,
            None,
            "dimension 1 with a zero coordinate; such codes have full-weight generators",
        )
    if F.q**dim > enumeration_limit:
        return None, None, "undecided: weight enumeration over budget"
    dist = _min_distance_rows(F, basis.rows, n, enumeration_limit)
    bound = n - dim + 1
    if dist < bound:
        return (
            False,
            None,
            f"minimum distance {dist} is below the [{n},{dim}] MDS bound {bound}",
        )
    return None, None, "undecided: MDS, but not exhibited as an evaluation code"


# --------------------------------------------------------------------------
# the full report


@dataclass
class HullReport:
    code: GrsCode
    setup: HullSetup
    dimension: int
    basis: Matrix
    classification: Classification
    method_dimensions: Dict[str, Optional[int]]
    methods_agreed: bool
    closed_form: Optional[ClosedFormHull]
    witnesses: List[DependencyWitness] = dc_field(default_factory=list)
    is_grs: Optional[bool] = None
    grs_witness: Optional[GrsCode] = None
    grs_reason: str = ""

    def to_dict(self) -> dict:
        code = self.code
        F = code.field
        fmt = F.format_rep
        setup = self.setup
        out = {
            "field": F.name,
            "n": code.n,
            "k": code.k,
            "alphas": [fmt(a) for a in code.alphas],
            "multipliers": [fmt(v) for v in code.multipliers],
            "s": str(setup.s),
            "t": str(setup.t),
            "u": str(setup.u),
            "epsilon": setup.epsilon,
            "d": str(setup.d),
            "l": str(setup.l),
            "mu": setup.mu,
            "nu": setup.nu,
            "delta": setup.delta,
            "gamma": setup.gamma,
            "gamma_prime": setup.gamma_prime,
            "case": setup.case.value,
            "dimension": self.dimension,
            "basis": [[fmt(x) for x in row] for row in self.basis.rows],
            "classification": self.classification.value,
            "method_dimensions": dict(self.method_dimensions),
            "methods_agreed": self.methods_agreed,
            "is_grs": self.is_grs,
            "grs_reason": self.grs_reason,
        }
        if self.grs_witness is not None:
            out["grs_witness_multipliers"] = [
                fmt(v) for v in self.grs_witness.multipliers
            ]
        if self.witnesses:
            out["witnesses"] = [
                {"rbar": str(w.rbar), "f": str(w.f), "g": str(w.g)}
                for w in self.witnesses
            ]
        return out


def hull_report(code: GrsCode, enumeration_limit: int = 1 << 20) -> HullReport:
    """Run every applicable method, compare them, classify, certify."""
    setup = hull_setup(code)
    basis = hull_oracle(code)
    dims: Dict[str, Optional[int]] = {"oracle": basis.nrows}
    agreed = True

    closed = hull_closed_form(setup)
    witnesses: List[DependencyWitness] = []
    if closed is not None:
        dims["closed_form"] = closed.dimension
        agreed &= closed.dimension == basis.nrows
        agreed &= closed.basis.row_space_equal(basis)
        dims["formula"] = None
        dims["algorithm"] = None
    else:
        dims["closed_form"] = None
        dims["formula"] = hull_dimension_formula(setup)
        agreed &= dims["formula"] == basis.nrows
        witnesses, alg_basis = hull_basis_algorithm(setup)
        dims["algorithm"] = alg_basis.nrows
        agreed &= alg_basis.nrows == basis.nrows
        agreed &= alg_basis.row_space_equal(basis)

    classification = classify(code, setup, basis)
    is_grs, grs_witness, grs_reason = certify_grs(
        setup, basis, closed, enumeration_limit
    )
    if grs_witness is not None:
        agreed &= grs_witness.generator_matrix().row_space_equal(basis)

    return HullReport(
        code=code,
        setup=setup,
        dimension=basis.nrows,
        basis=basis,
        classification=classification,
        method_dimensions=dims,
        methods_agreed=agreed,
        closed_form=closed,
        witnesses=witnesses,
        is_grs=is_grs,
        grs_witness=grs_witness,
        grs_reason=grs_reason,
    )

"""Code object checks: generator/dual structure, worked parameter sets,
and the brute-force distance enumerator both MDS-sanity-checked and
cross-checked between its two implementations."""

import random

import grshull.grs as grs_mod
from grshull import BadParameters, BudgetExceeded, field_create, field_of_order
from grshull.grs import GrsCode
from grshull.linalg import Matrix
from grshull.poly import Poly

F9 = field_of_order(9)
F16 = field_of_order(16)


def _raises(exc_type, fn, *args, **kwargs):
    try:
        fn(*args, **kwargs)
    except exc_type:
        return
    raise AssertionError(f"expected {exc_type.__name__}")


def _code_957():
    g = F9.gen_pow
    alphas = [F9.one, g(2), g(3), g(4), g(5), g(6), g(7)]
    mult = [g(2), g(3), F9.one, g(7), g(3), g(5), g(1)]
    return GrsCode(F9, alphas, mult, 5)


def _code_16_11_4():
    g = F16.gen_pow
    alphas = [g(11), g(12), g(2), g(13), g(14), g(4), g(5), g(6), g(8), g(9), g(10)]
    mult = [g(14), g(10), g(5), g(11), g(9), g(2), g(1), F16.one, F16.one, g(3), g(1)]
    return GrsCode(F16, alphas, mult, 4)


def test_worked_gf9_code_polynomials():
    code = _code_957()
    assert code.point_poly() == Poly.parse(
        F9, "z^7 + g*z^6 + g^2*z^5 + g^3*z^4 + 2*z^3 + g^5*z^2 + g^6*z + g^7"
    )
    assert code.multiplier_interpolant() == Poly.parse(F9, "z^3 + g^3*z^2 + g^5*z + g")


def test_worked_gf9_code_is_mds():
    assert _code_957().min_distance_bruteforce() == 3


def test_worked_gf16_code_is_mds():
    assert _code_16_11_4().min_distance_bruteforce() == 8


def test_generator_matrix_shape_and_rows():
    code = _code_957()
    G = code.generator_matrix()
    assert (G.nrows, G.ncols) == (5, 7)
    assert G.rows[0] == list(code.multipliers)
    F = code.field
    assert G.rows[2] == [
        F.mul(v, F.pow(a, 2)) for a, v in zip(code.alphas, code.multipliers)
    ]
    assert G.rank() == 5


def test_dual_is_orthogonal_complement():
    for code in (_code_957(), _code_16_11_4()):
        dual = code.dual()
        assert dual.n == code.n and dual.k == code.n - code.k
        G = code.generator_matrix()
        H = dual.generator_matrix()
        assert (G * H.transpose()).is_zero
        assert dual.dual() == code


def test_dual_interpolant_relation():
    # the dual's multiplier interpolant interpolates h'(a_i)/s(a_i) sign-free:
    # its defining values are 1/w_i = v_i h'(a_i)
    code = _code_957()
    F = code.field
    dual = code.dual()
    hp = code.point_poly().derivative()
    t = dual.multiplier_interpolant()
    for a, v in zip(code.alphas, code.multipliers):
        assert t.eval_rep(a) == F.mul(v, hp.eval_rep(a))


def test_construction_validations():
    g = F9.gen_pow
    good_a = [F9.one, g(1), g(2), g(3)]
    good_v = [F9.one, F9.one, F9.one, F9.one]
    GrsCode(F9, good_a, good_v, 2)
    _raises(BadParameters, GrsCode, F9, good_a, good_v, 0)
    _raises(BadParameters, GrsCode, F9, good_a, good_v, 4)
    _raises(BadParameters, GrsCode, F9, [F9.one, F9.one, g(2), g(3)], good_v, 2)
    _raises(BadParameters, GrsCode, F9, good_a, [F9.one, F9.zero, F9.one, F9.one], 2)
    _raises(BadParameters, GrsCode, F9, good_a[:3], good_v, 2)  # gcd(3, 9) != 1
    # n = q is impossible: q distinct points with n < q required
    F4 = field_of_order(4)
    _raises(
        BadParameters,
        GrsCode,
        F4,
        [F4.zero, F4.one, F4.gen_pow(1), F4.gen_pow(2)],
        [F4.one] * 4,
        2,
    )


def test_interpolant_override_checked():
    code = _code_957()
    s = Poly.parse(F9, "z^3 + g^3*z^2 + g^5*z + g")
    again = GrsCode(F9, code.alphas_elems(), code.multipliers_elems(), 5, interpolant=s)
    assert again.multiplier_interpolant() == s
    wrong = s + Poly.one(F9)
    _raises(
        BadParameters,
        GrsCode,
        F9,
        code.alphas_elems(),
        code.multipliers_elems(),
        5,
        interpolant=wrong,
    )
    # right values but degree n: adding the point polynomial changes nothing
    # pointwise yet must be rejected
    too_big = s + code.point_poly()
    _raises(
        BadParameters,
        GrsCode,
        F9,
        code.alphas_elems(),
        code.multipliers_elems(),
        5,
        interpolant=too_big,
    )


def test_codeword_encoding():
    code = _code_957()
    F = code.field
    msg = Poly.parse(F9, "z + 1")
    word = code.codeword(msg)
    expect = [
        F.mul(v, F.add(a, 1)) for a, v in zip(code.alphas, code.multipliers)
    ]
    assert word == expect
    assert code.contains_vector(word)
    _raises(BadParameters, code.codeword, Poly.parse(F9, "z^5"))


def test_random_codes_attain_singleton_bound():
    rng = random.Random(5)
    for q in (7, 8, 9):
        F = field_of_order(q)
        for _ in range(8):
            n = rng.randrange(3, min(q, 7))
            while n % F.p == 0:  # keep gcd(n, q) = 1
                n = rng.randrange(3, min(q, 7))
            k = rng.randrange(1, min(n, 4))
            alphas = rng.sample(range(q), n)
            mult = [rng.randrange(1, q) for _ in range(n)]
            code = GrsCode(F, [F.element(a) for a in alphas], [F.element(v) for v in mult], k)
            assert code.min_distance_bruteforce() == n - k + 1


def test_distance_paths_agree():
    F7 = field_create(7)
    rng = random.Random(9)
    for _ in range(5):
        n = 5
        k = 2
        alphas = rng.sample(range(7), n)
        mult = [rng.randrange(1, 7) for _ in range(n)]
        code = GrsCode(F7, [F7.element(a) for a in alphas], [F7.element(v) for v in mult], k)
        fast = code.min_distance_bruteforce()
        saved = grs_mod._NUMPY_TABLE_MAX_Q
        try:
            grs_mod._NUMPY_TABLE_MAX_Q = 1  # force the plain-python walk
            slow = code.min_distance_bruteforce()
        finally:
            grs_mod._NUMPY_TABLE_MAX_Q = saved
        assert fast == slow == n - k + 1


def test_distance_budget():
    F5 = field_create(5)
    code = GrsCode(F5, [0, 1, 2, 3], [1, 1, 1, 1], 3)
    _raises(BudgetExceeded, code.min_distance_bruteforce, limit=10)
    assert code.min_distance_bruteforce() == 2


def test_row_space_and_parity():
    code = _code_957()
    basis = code.row_space_basis()
    assert basis.nrows == 5
    H = code.parity_check_matrix()
    for row in basis.rows:
        assert all(x == 0 for x in H.matvec(row))

"""Polynomial layer checks, including the worked factorizations the
hull machinery later leans on."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from grshull import BadFormat, field_create, field_of_order
from grshull.poly import NEG_INF, Poly, gcd, pow_mod, splits_into_distinct_linear_factors


def _raises(exc_type, fn, *args):
    try:
        fn(*args)
    except exc_type:
        return
    raise AssertionError(f"expected {exc_type.__name__}")


F9 = field_of_order(9)
F25 = field_of_order(25)


def _poly9(reps):
    return Poly(F9, reps)


# --- basics -----------------------------------------------------------------


def test_zero_polynomial_degree():
    z = Poly.zero(F9)
    assert z.degree == NEG_INF
    assert z.is_zero
    assert str(z) == "0"
    # NEG_INF degrees compose correctly through products
    assert (z * Poly.variable(F9)).degree == NEG_INF


def test_product_of_all_nonzero_roots_gf8():
    # prod over the full multiplicative group: z^7 + 1, derivative z^6
    F8 = field_of_order(8)
    h = Poly.from_roots(F8, [F8.gen_pow(i) for i in range(7)])
    assert h == Poly.parse(F8, "z^7 + 1")
    assert h.derivative() == Poly.parse(F8, "z^6")


def test_gcd_basics():
    z2 = Poly.parse(F9, "z^2")
    z4 = Poly.parse(F9, "z^4")
    assert gcd(z2, z4) == z2
    assert gcd(Poly.zero(F9), Poly.zero(F9)).is_zero
    assert gcd(Poly.zero(F9), z4) == z4
    # result is monic even when the inputs are not
    a = Poly.parse(F9, "2*z + 2")
    assert gcd(a, a) == Poly.parse(F9, "z + 1")


def test_quartic_plus_derivative_is_a_square():
    # worked q=25 instance: h + h' factors as ((z+g^2)(z+g^15))^2
    g = F25.gen_pow
    h = Poly.from_elements(F25, [g(8), g(23), g(14), g(5), F25.one])
    w = h + h.derivative()
    s = Poly.from_roots(F25, [-g(2), -g(15)])
    assert w == s * s
    res = w.scaled_square_root()
    assert res is not None
    lam, root = res
    assert lam == F25.one
    assert root == s


def test_quartic_with_odd_degree_combination():
    # worked q=25 instance: z*h + h' = (z+g^9)(z^2+g^9*z+g^16)^2, odd degree
    g = F25.gen_pow
    h = Poly.from_elements(F25, [g(11), g(17), g(22), g(3), F25.one])
    w = Poly.variable(F25) * h + h.derivative()
    lin = Poly.parse(F25, "z + g^9")
    sq = Poly.parse(F25, "z^2 + g^9*z + g^16")
    assert w == lin * sq * sq
    assert w.scaled_square_root() is None  # odd degree


def test_pow_mod_matches_naive_power():
    h = Poly.parse(F9, "z^7 + 2*z + 1")
    for e in (0, 1, 5, 9, 81):
        assert pow_mod(Poly.variable(F9), e, h) == (Poly.variable(F9) ** e) % h


def test_splits_into_distinct_linear_factors():
    F3 = field_create(3)
    assert splits_into_distinct_linear_factors(Poly.from_roots(F3, [0, 1, 2]))
    assert not splits_into_distinct_linear_factors(Poly.from_roots(F3, [1, 1]))
    assert not splits_into_distinct_linear_factors(Poly.parse(F3, "z^2 + 1"))
    assert splits_into_distinct_linear_factors(Poly.parse(F3, "2"))
    assert not splits_into_distinct_linear_factors(Poly.zero(F3))
    # scalar multiples do not matter
    assert splits_into_distinct_linear_factors(Poly.parse(F9, "g^3*z^2 + g^3*z"))


def test_parse_rejects_malformed_text():
    for bad in ("", "z^-1", "y", "z*z", "g^3*z + + 1", "z ^", "+"):
        _raises(BadFormat, Poly.parse, F9, bad)


def test_format_examples():
    g = F9.gen_pow
    p = Poly.from_elements(F9, [g(1), g(5), F9.one])
    assert str(p) == "z^2 + g^5*z + g"
    assert str(Poly.from_elements(F9, [F9.zero, F9.one])) == "z"
    assert str(Poly.constant(F9, 2)) == "g^4"  # extension fields print powers of g
    assert str(Poly.constant(field_create(7), 2)) == "2"
    assert Poly.parse(F9, "z^4 - z") == Poly.parse(F9, "z^4 + 2*z")


def test_shift_and_scale():
    p = Poly.parse(F9, "z + 1")
    assert p.shift(2) == Poly.parse(F9, "z^3 + z^2")
    assert p.scale(F9.gen_pow(3)) == Poly.parse(F9, "g^3*z + g^3")
    assert p.scale(0).is_zero


# --- property tests ---------------------------------------------------------

_coeffs9 = st.lists(st.integers(min_value=0, max_value=8), max_size=9)


@given(_coeffs9, _coeffs9)
def test_division_identity(aa, bb):
    a, b = _poly9(aa), _poly9(bb)
    if b.is_zero:
        _raises(ZeroDivisionError, divmod, a, b)
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(_coeffs9, _coeffs9, _coeffs9)
def test_ring_axioms(aa, bb, cc):
    a, b, c = _poly9(aa), _poly9(bb), _poly9(cc)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Poly.zero(F9)


@given(_coeffs9, _coeffs9)
def test_gcd_divides_both(aa, bb):
    a, b = _poly9(aa), _poly9(bb)
    d = gcd(a, b)
    if d.is_zero:
        assert a.is_zero and b.is_zero
        return
    assert (a % d).is_zero
    assert (b % d).is_zero
    assert d.is_monic


@given(_coeffs9)
def test_text_round_trip(aa):
    p = _poly9(aa)
    assert Poly.parse(F9, str(p)) == p


@given(st.data())
@settings(max_examples=60)
def test_interpolation_passes_through_points(data):
    n = data.draw(st.integers(min_value=1, max_value=8))
    xs = data.draw(
        st.lists(
            st.integers(min_value=0, max_value=8), min_size=n, max_size=n, unique=True
        )
    )
    ys = data.draw(st.lists(st.integers(min_value=0, max_value=8), min_size=n, max_size=n))
    p = Poly.interpolate(F9, xs, ys)
    assert p.degree < n
    for x, y in zip(xs, ys):
        assert p.eval_rep(x) == y


@given(st.lists(st.integers(min_value=0, max_value=8), min_size=1, max_size=5),
       st.integers(min_value=1, max_value=8))
def test_scaled_square_root_recovers(ss, lam_rep):
    s = _poly9(ss)
    if s.is_zero:
        return
    s = s.monic()
    w = (s * s).scale(F9.element(lam_rep))
    res = w.scaled_square_root()
    assert res is not None
    lam, root = res
    assert lam.rep == lam_rep and root == s


def test_scaled_square_root_exhaustive_soundness():
    # Every polynomial of degree <= 4 over GF(9) and GF(4): the scaled
    # square root exists exactly for the scalar-times-square set, which is
    # enumerated here by brute force.
    for F in (field_of_order(9), field_create(2, 2)):
        q = F.q
        squares = set()
        for d in range(3):
            lo = q**d
            for idx in range(lo, 2 * lo):  # monic: top digit 1
                digits = []
                t = idx
                for _ in range(d + 1):
                    digits.append(t % q)
                    t //= q
                s = Poly(F, digits)
                for lam in range(1, q):
                    squares.add((s * s).scale(F.element(lam)).coeffs)
        hits = 0
        for idx in range(q**5):
            digits = []
            t = idx
            for _ in range(5):
                digits.append(t % q)
                t //= q
            w = Poly(F, digits)
            res = w.scaled_square_root()
            if w.coeffs in squares:
                assert res is not None
                lam, root = res
                assert (root * root).scale(lam) == w and root.is_monic
                hits += 1
            else:
                assert res is None
        assert hits == len(squares)


def test_derivative_product_rule():
    rng = random.Random(3)
    for _ in range(40):
        a = _poly9([rng.randrange(9) for _ in range(rng.randrange(6))])
        b = _poly9([rng.randrange(9) for _ in range(rng.randrange(6))])
        assert (a * b).derivative() == a.derivative() * b + a * b.derivative()

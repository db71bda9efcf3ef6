import math
import random

import pytest

from towerbound import arith, zpoly
from towerbound.cyclotomic import (
    CycloElement,
    ElementParseError,
    ModulusMismatch,
    NotTotallySplit,
    RamifiedPrime,
    cyclotomic_polynomial,
    cyclo_mul,
    is_inert,
    match_up_to_unit,
    parse_cyclo_element,
    primes_above,
    splitting_data,
)


def test_cyclotomic_polynomial_small():
    assert cyclotomic_polynomial(1).poly == (-1, 1)
    assert cyclotomic_polynomial(2).poly == (1, 1)
    assert cyclotomic_polynomial(3).poly == (1, 1, 1)
    assert cyclotomic_polynomial(7).poly == (1,) * 7
    assert cyclotomic_polynomial(9).poly == (1, 0, 0, 1, 0, 0, 1)
    assert cyclotomic_polynomial(12).poly == (1, 0, -1, 0, 1)


def test_cyclotomic_polynomials_multiply_to_xm_minus_1():
    for m in range(1, 41):
        prod = [1]
        for d in range(1, m + 1):
            if m % d == 0:
                prod = zpoly.mul(prod, list(cyclotomic_polynomial(d).poly))
        want = [0] * m + [1]
        want[0] = -1
        assert prod == want, m


def test_degree_is_phi():
    for m in range(1, 60):
        assert cyclotomic_polynomial(m).phi == arith.euler_phi(m)


def _random_element(rng, mod):
    return CycloElement(
        mod, tuple(rng.randrange(-5, 6) for _ in range(mod.phi))
    )


def test_ring_axioms_seeded():
    rng = random.Random(123)
    for m in (3, 5, 7, 9, 12):
        mod = cyclotomic_polynomial(m)
        for _ in range(20):
            a, b, c = (_random_element(rng, mod) for _ in range(3))
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_zeta_power_order():
    mod = cyclotomic_polynomial(7)
    z = CycloElement.zeta_power(mod, 1)
    acc = CycloElement.integer(mod, 1)
    for _ in range(7):
        acc = acc * z
    assert acc == CycloElement.integer(mod, 1)


def test_modulus_mismatch():
    a = CycloElement.integer(cyclotomic_polynomial(3), 1)
    b = CycloElement.integer(cyclotomic_polynomial(5), 1)
    with pytest.raises(ModulusMismatch):
        _ = a + b


def test_conjugate_is_ring_map():
    rng = random.Random(321)
    mod = cyclotomic_polynomial(7)
    for _ in range(20):
        a, b = _random_element(rng, mod), _random_element(rng, mod)
        for i in (2, 3, 6):
            assert (a * b).conjugate(i) == a.conjugate(i) * b.conjugate(i)
            assert (a + b).conjugate(i) == a.conjugate(i) + b.conjugate(i)
    with pytest.raises(arith.NotCoprime):
        _random_element(rng, mod).conjugate(7)


def test_norm_multiplicative_and_integers():
    rng = random.Random(77)
    mod = cyclotomic_polynomial(5)
    for _ in range(15):
        a, b = _random_element(rng, mod), _random_element(rng, mod)
        assert (a * b).norm() == a.norm() * b.norm()
    assert CycloElement.integer(mod, 3).norm() == 3**4
    assert CycloElement.zeta_power(mod, 2).norm() == 1


def test_render_and_parse_roundtrip():
    rng = random.Random(55)
    for m in (3, 5, 7, 9):
        mod = cyclotomic_polynomial(m)
        for _ in range(40):
            a = _random_element(rng, mod)
            assert parse_cyclo_element(a.render(), m) == a
            assert parse_cyclo_element(a.render(unicode_ok=False), m) == a


def test_parse_specific_forms():
    mod = cyclotomic_polynomial(7)
    a = parse_cyclo_element("ζ₇⁵ + 2ζ₇³ + 1", 7)
    assert a.coeffs == (1, 0, 0, 2, 0, 1)
    b = parse_cyclo_element("zeta7^5 + 2*zeta7^3 + 1", 7)
    assert a == b
    c = parse_cyclo_element("-zeta^2", 7)  # conductor implied
    assert c == -CycloElement.zeta_power(mod, 2)
    d = parse_cyclo_element("zeta7^9", 7)  # exponent folds mod 7
    assert d == CycloElement.zeta_power(mod, 2)
    assert parse_cyclo_element("-14", 7).constant_value() == -14


def test_parse_rejects():
    with pytest.raises(ElementParseError):
        parse_cyclo_element("zeta5^2", 7)  # wrong conductor
    for bad in ("", "zeta7^", "x + 1", "zeta7^2^3", "2 -"):
        with pytest.raises(ElementParseError):
            parse_cyclo_element(bad, 7)


def test_splitting_data_known_cases():
    # (q, m) -> (e, f, g), checked against the order of q mod m by hand
    cases = {
        (2, 3): (1, 2, 1),
        (7, 3): (1, 1, 2),
        (2, 9): (1, 6, 1),
        (43, 7): (1, 1, 6),
        (2, 7): (1, 3, 2),
        (3, 5): (1, 4, 1),
    }
    for (q, m), efg in cases.items():
        sd = splitting_data(q, m)
        assert (sd.e, sd.f, sd.g) == efg
        assert sd.e * sd.f * sd.g == arith.euler_phi(m)


def test_splitting_data_rationals_and_errors():
    sd = splitting_data(7, 1)
    assert (sd.e, sd.f, sd.g) == (1, 1, 1)
    assert splitting_data(7, 2).classification == "totally split"
    with pytest.raises(RamifiedPrime):
        splitting_data(3, 9)
    with pytest.raises(ValueError):
        splitting_data(6, 5)


def test_is_inert_matches_primitive_root():
    for m in (3, 5, 7, 9):
        for q in (2, 5, 11, 13, 17, 19, 23):
            if m % q == 0:
                continue
            brute = {pow(q, k, m) for k in range(arith.euler_phi(m))}
            expected = len(brute) == arith.euler_phi(m)
            assert is_inert(q, m) == expected


def test_primes_above_split_case():
    pins = primes_above(43, 7)
    assert tuple(p.root for p in pins) == (4, 11, 16, 21, 35, 41)
    poly = list(cyclotomic_polynomial(7).poly)
    for p in pins:
        assert zpoly.eval_at(poly, p.root) % 43 == 0
    assert pins[0].render(unicode_ok=False) == "(43, zeta7 - 4)"


def test_primes_above_requires_total_split():
    with pytest.raises(NotTotallySplit):
        primes_above(2, 7)


def test_match_up_to_unit():
    mod = cyclotomic_polynomial(7)
    t = CycloElement.integer(mod, 43)
    assert match_up_to_unit(t, 43) == (1, 0)
    z2 = CycloElement.zeta_power(mod, 2)
    assert match_up_to_unit(-(t * z2), 43) == (-1, 2)
    assert match_up_to_unit(CycloElement.integer(mod, 44), 43) is None


def test_cyclo_mul_matches_pairwise():
    rng = random.Random(9)
    mod = cyclotomic_polynomial(9)
    for _ in range(10):
        els = [_random_element(rng, mod) for _ in range(4)]
        acc = els[0]
        for e in els[1:]:
            acc = acc * e
        assert cyclo_mul(mod, els) == acc

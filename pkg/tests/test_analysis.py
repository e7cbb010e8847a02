import numpy as np
import pytest

from schurcc import (
    BelowRegularity,
    FieldSpec,
    NotCoprime,
    Poly,
    UnstabilizedError,
    ZeroCode,
    analyze_code,
    code_from_generator,
    code_power,
    disjoint_support_battery,
    enumerate_divisors,
    enumerate_invariant_cyclic,
    equilibrium_cycle_length,
    equilibrium_generator,
    equilibrium_min_distance,
    generator_from_basis,
    hilbert_report,
    in_row_space,
    is_invariant_at_equilibrium,
    min_distance,
    parse_poly,
    pattern_polynomial,
    poly_schur_power,
    row_spaces_equal,
)
from conftest import (
    make_code,
    make_ring,
    oracle_pattern,
)


# ---------------------------------------------------------------------------
# Hilbert reports


def test_hilbert_f3(f3_code):
    report = hilbert_report(f3_code)
    assert report.dims == (2, 3, 3)
    assert report.r == 2
    assert report.ell == 1
    assert report.r_prime == 1
    assert report.constacyclic_dims == (2, 3, 3)


def test_hilbert_f5(f5_code):
    report = hilbert_report(f5_code)
    assert report.dims == (1, 1)
    assert (report.r, report.r_prime) == (1, 0)


def test_hilbert_f7(f7_code):
    report = hilbert_report(f7_code)
    assert report.dims == (3, 3)
    assert (report.r, report.ell, report.r_prime) == (1, 3, 0)
    assert report.constacyclic_dims == (3, 3)


def test_hilbert_full_code():
    full = make_code(5, 4, 1, "1")
    report = hilbert_report(full)
    assert report.dims == (4, 4)
    assert report.r == 1


def test_hilbert_rejects_zero_code():
    ring = make_ring(5, 4, 1)
    zero = code_from_generator(ring, ring.modulus())
    with pytest.raises(ZeroCode):
        hilbert_report(zero)


def test_hilbert_unstabilized_carries_partial(f3_code):
    with pytest.raises(UnstabilizedError) as excinfo:
        hilbert_report(f3_code, max_power=2)
    assert excinfo.value.dims == (2, 3)


# ---------------------------------------------------------------------------
# pattern polynomials


def test_pattern_f3(f3_code):
    info = pattern_polynomial(f3_code)
    assert info.p == parse_poly("x^3+1", f3_code.ring.field)
    assert (info.v, info.d) == (3, 1)
    assert info.coeffs_c == (1, 2, 0)


def test_pattern_f5(f5_code):
    info = pattern_polynomial(f5_code)
    assert info.p == f5_code.g  # the whole generator repeats with ratio 3
    assert (info.v, info.d) == (1, 3)


def test_pattern_f7(f7_code):
    info = pattern_polynomial(f7_code)
    assert info.p == f7_code.g
    assert (info.v, info.d) == (3, 2)


def test_pattern_full_code():
    full = make_code(5, 4, 1, "1")
    info = pattern_polynomial(full)
    assert info.p == Poly.one(full.ring.field)
    assert info.v == 4
    assert pow(info.d, -1, 5) == full.ring.a  # d^(-n/v) = a reads d = a^(-1) here


def test_pattern_invariants_over_corpus(corpus):
    for code in corpus:
        info = pattern_polynomial(code)
        ring = code.ring
        n, q = ring.n, ring.q
        assert n % info.v == 0
        assert info.p.constant == 1
        assert info.p.degree == n - info.v
        assert info.coeffs_c[0] == 1
        # p divides the modulus and x^v * p = d^(-1) * p in the ring
        assert (ring.modulus() % info.p).is_zero()
        lhs = ring.reduce(info.p.shift_up(info.v))
        assert lhs == info.p.scale(pow(info.d, -1, q))
        # exact cofactor identity: p * (a*d*x^v - a) = x^n - a
        cof = parse_poly([(-ring.a) % q] + [0] * (info.v - 1) + [ring.a * info.d % q], ring.field)
        assert info.p * cof == ring.modulus()
        # reconstruction g = sum c_i x^i p
        acc = Poly.zero(ring.field)
        for i, c in enumerate(info.coeffs_c):
            acc = acc + info.p.shift_up(i).scale(c)
        assert acc == code.g
        # shifts of p below the period occupy disjoint positions
        rows = np.zeros((info.v, n), dtype=np.int64)
        for i in range(info.v):
            rows[i, i : i + len(info.p.coeffs)] = info.p.coeffs
        assert ((rows != 0).sum(axis=0) <= 1).all()


def test_pattern_matches_definition_oracle(corpus):
    for code in corpus:
        info = pattern_polynomial(code)
        p_expected, v_expected = oracle_pattern(code)
        assert (info.p, info.v) == (p_expected, v_expected)


# ---------------------------------------------------------------------------
# equilibrium operations


def test_equilibrium_generator_f3(f3_code):
    assert equilibrium_generator(f3_code, 1) == parse_poly("x^3+1", f3_code.ring.field)


def test_equilibrium_generator_f5(f5_code):
    expected = parse_poly([1, 4, 1, 4], f5_code.ring.field)
    assert equilibrium_generator(f5_code, 1) == expected


def test_equilibrium_generator_at_zero_regularity(f5_code):
    info = pattern_polynomial(f5_code)
    assert equilibrium_generator(f5_code, 0) == info.p


def test_equilibrium_generator_below_regularity(f3_code):
    with pytest.raises(BelowRegularity):
        equilibrium_generator(f3_code, 0)  # r' = 1
    with pytest.raises(BelowRegularity):
        equilibrium_generator(f3_code, -1)


def test_equilibrium_min_distance_values(f3_code, f5_code):
    assert equilibrium_min_distance(f3_code) == 2
    assert equilibrium_min_distance(f5_code) == 4
    assert equilibrium_min_distance(make_code(5, 4, 1, "1")) == 1


def test_equilibrium_min_distance_confirmed_by_enumeration(f3_code):
    stabilized = make_code(3, 6, 1, "x^3+1")
    assert min_distance(stabilized).value == equilibrium_min_distance(f3_code)


def test_invariance_flags(f3_code, f5_code, f7_code):
    assert is_invariant_at_equilibrium(f3_code)
    assert not is_invariant_at_equilibrium(f5_code)
    assert is_invariant_at_equilibrium(f7_code)  # d = 2, ell = 3, 2^3 = 1


def test_invariance_of_progression_generators():
    for k, g in enumerate_invariant_cyclic(FieldSpec(5), 6):
        code = make_code(5, 6, 1, g.coeff_list())
        assert is_invariant_at_equilibrium(code)


def test_cycle_length_f5(f5_code):
    assert equilibrium_cycle_length(f5_code) == 4
    # direct span comparison: generators cycle with period exactly 4
    base = code_power(f5_code, 1)
    for t in (1, 2, 3):
        assert not row_spaces_equal(code_power(f5_code, 1 + t).basis, base.basis)
    assert row_spaces_equal(code_power(f5_code, 5).basis, base.basis)


def test_cycle_length_invariant_code(f3_code):
    assert equilibrium_cycle_length(f3_code) == 1


def test_cycle_length_is_order_of_twist(f7_code):
    from schurcc import FieldElement, multiplicative_order

    info = pattern_polynomial(f7_code)
    twist = pow(info.d, f7_code.ring.ell, 7)
    expected = multiplicative_order(FieldElement(twist, f7_code.ring.field))
    assert equilibrium_cycle_length(f7_code) == expected == 1


def test_cycle_length_bounded_by_field_size(corpus):
    for code in corpus:
        assert 1 <= equilibrium_cycle_length(code) <= code.ring.q


def test_cycle_confirmed_by_span_comparison(corpus):
    for code in corpus:
        if code.n > 6:
            continue  # keep the direct-power cross-check cheap
        report = hilbert_report(code)
        ell, rp = code.ring.ell, report.r_prime
        t = equilibrium_cycle_length(code)
        anchor = code_power(code, rp * ell + 1)
        assert row_spaces_equal(
            code_power(code, (rp + t) * ell + 1).basis, anchor.basis
        )
        for s in range(1, t):
            assert not row_spaces_equal(
                code_power(code, (rp + s) * ell + 1).basis, anchor.basis
            )


# ---------------------------------------------------------------------------
# disjoint-support battery


def test_battery_progression_code():
    battery = disjoint_support_battery(make_code(3, 6, 1, "x^3+1"))
    assert battery.applicable
    assert battery.as_tuple() == (True, True, True, True, True)


def test_battery_generic_code(f3_code):
    battery = disjoint_support_battery(f3_code)
    assert battery.applicable
    assert battery.as_tuple() == (False, False, False, False, False)


def test_battery_full_code():
    battery = disjoint_support_battery(make_code(5, 4, 1, "1"))
    assert battery.as_tuple() == (True, True, True, True, True)


def test_battery_not_applicable_when_k_does_not_divide_n():
    code = make_code(5, 4, 1, "x+4")  # k = 3 does not divide 4
    battery = disjoint_support_battery(code)
    assert not battery.applicable
    assert battery.as_tuple() == (False, False, False, False, False)


def test_battery_conditions_agree_over_corpus(corpus):
    for code in corpus:
        if code.n % code.k:
            continue
        assert disjoint_support_battery(code).consistent()


# ---------------------------------------------------------------------------
# invariant cyclic codes


def test_invariant_cyclic_n6_f5():
    codes = enumerate_invariant_cyclic(FieldSpec(5), 6)
    assert [k for k, _ in codes] == [1, 2, 3, 6]
    gens = {k: g for k, g in codes}
    f5 = FieldSpec(5)
    assert gens[1] == parse_poly("x^5+x^4+x^3+x^2+x+1", f5)
    assert gens[2] == parse_poly("x^4+x^2+1", f5)
    assert gens[3] == parse_poly("x^3+1", f5)
    assert gens[6] == Poly.one(f5)


def test_invariant_cyclic_prime_length():
    codes = enumerate_invariant_cyclic(FieldSpec(5), 7)
    assert [k for k, _ in codes] == [1, 7]


def test_invariant_cyclic_rejects_noncoprime():
    with pytest.raises(NotCoprime):
        enumerate_invariant_cyclic(FieldSpec(3), 6)


def test_invariant_cyclic_exhaustive_cross_check():
    # brute force over all 16 divisors of x^4 - 1 over F_5: exactly the
    # three progression generators give C^(2) = C
    ring = make_ring(5, 4, 1)
    expected = {g for _, g in enumerate_invariant_cyclic(ring.field, 4)}
    found = set()
    for g in enumerate_divisors(ring):
        code = code_from_generator(ring, g)
        if row_spaces_equal(code_power(code, 2).basis, code.basis):
            found.add(code.g)
    assert found == expected
    assert len(found) == 3


# ---------------------------------------------------------------------------
# theorem-level properties over the corpus


def _constacyclic_powers_to_check(code, report):
    ell = code.ring.ell
    return [report.r_prime + offset for offset in (0, 1, 2)], ell


def test_pattern_of_powers_is_power_of_pattern(corpus):
    # the pattern of the recovered generator of C^(z*ell+1) equals p^(z*ell+1);
    # every such power is shift-closed, so generator recovery always succeeds
    for code in corpus:
        info = pattern_polynomial(code)
        ell = code.ring.ell
        for z in (0, 1, 2):
            e = z * ell + 1
            power = code_power(code, e)
            gen = generator_from_basis(power.basis, code.ring)
            power_code = code_from_generator(code.ring, gen)
            expected = poly_schur_power(info.p, code.ring, e)
            got = pattern_polynomial(power_code)
            assert got.p == expected


def test_pattern_power_divides_power_generator(corpus):
    for code in corpus:
        info = pattern_polynomial(code)
        report = hilbert_report(code)
        zs, ell = _constacyclic_powers_to_check(code, report)
        for z in zs:
            e = z * ell + 1
            gen = generator_from_basis(code_power(code, e).basis, code.ring)
            assert (gen % poly_schur_power(info.p, code.ring, e)).is_zero()


def test_pattern_power_lies_in_power_code(corpus):
    for code in corpus:
        info = pattern_polynomial(code)
        report = hilbert_report(code)
        zs, ell = _constacyclic_powers_to_check(code, report)
        for z in zs:
            e = z * ell + 1
            vec = code.ring.coeff_vector(poly_schur_power(info.p, code.ring, e))
            assert in_row_space(code_power(code, e).basis, vec)


def test_equilibrium_generators_match_power_spans(corpus):
    for code in corpus:
        report = hilbert_report(code)
        pattern = pattern_polynomial(code)
        ell = code.ring.ell
        for z in (report.r_prime, report.r_prime + 1, report.r_prime + 2):
            e = z * ell + 1
            predicted = equilibrium_generator(code, z, pattern, report)
            recovered = generator_from_basis(code_power(code, e).basis, code.ring)
            assert predicted == recovered


def test_invariance_criterion_bidirectional(corpus):
    for code in corpus:
        report = hilbert_report(code)
        ell, rp = code.ring.ell, report.r_prime
        lhs = code_power(code, rp * ell + 1)
        rhs = code_power(code, (rp + 1) * ell + 1)
        assert is_invariant_at_equilibrium(code) == row_spaces_equal(
            lhs.basis, rhs.basis
        )


# ---------------------------------------------------------------------------
# aggregate report


def test_analyze_code_schema(f3_code):
    report = analyze_code(f3_code)
    assert report == {
        "q": 3,
        "n": 6,
        "a": 1,
        "ell": 1,
        "g": [1, 2, 0, 1, 2],
        "k": 2,
        "dims": [2, 3, 3],
        "r": 2,
        "r_prime": 1,
        "constacyclic_dims": [2, 3, 3],
        "pattern": {"p": [1, 0, 0, 1], "v": 3, "d": 1, "c": [1, 2, 0]},
        "invariant": True,
        "cycle_len": 1,
        "equilibrium_generator": [1, 0, 0, 1],
        "equilibrium_min_distance": 2,
        "power2_constacyclic": True,
    }

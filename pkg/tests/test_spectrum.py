from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from crcontract.polyring import GaussRat
from crcontract.spectrum import (
    Spectrum,
    SpectrumError,
    admissible_tangent_indices,
    degree_bound,
    extended_resonances,
    resonances,
)

S124 = Spectrum.power(Fraction(1, 2), (1, 2, 4))

# the 14 pairs, written (a,a'; b,b'; c,c') per variable
R3_LISTED = [
    (4, 0, 0, 0, 0, 0), (0, 4, 0, 0, 0, 0), (3, 1, 0, 0, 0, 0), (1, 3, 0, 0, 0, 0),
    (2, 2, 0, 0, 0, 0), (2, 0, 1, 0, 0, 0), (0, 2, 0, 1, 0, 0), (2, 0, 0, 1, 0, 0),
    (0, 2, 1, 0, 0, 0), (1, 1, 1, 0, 0, 0), (1, 1, 0, 1, 0, 0), (0, 0, 2, 0, 0, 0),
    (0, 0, 0, 2, 0, 0), (0, 0, 1, 1, 0, 0),
]


def interleaved_to_pair(t):
    return (t[0::2], t[1::2])


class TestDegreeBound:
    @pytest.mark.parametrize("exps,expected", [((1, 2, 4), 4), ((1, 3), 3), ((1,), 1), ((2, 5), 2)])
    def test_power(self, exps, expected):
        assert degree_bound(Spectrum.power(Fraction(1, 2), exps)) == expected

    def test_single_exact(self):
        s = Spectrum.exact([Fraction(1, 2)])
        assert degree_bound(s) == 1
        assert resonances(s, 1) == []

    def test_matches_brute_force(self):
        s = Spectrum.exact([GaussRat(0, Fraction(1, 2)), Fraction(1, 4), Fraction(-1, 9)])
        vals = [(v.re, v.im) for v in s.values]
        assert degree_bound(s) == oracles.brute_degree_bound(vals) == 3


class TestResonances:
    def test_block_two(self):
        assert resonances(S124, 2) == [(2, 0, 0)]

    def test_block_three(self):
        assert set(resonances(S124, 3)) == {(4, 0, 0), (2, 1, 0), (0, 2, 0)}
        assert resonances(S124, 3) == sorted(resonances(S124, 3))

    def test_block_one_empty(self):
        assert resonances(S124, 1) == []

    def test_out_of_range(self):
        with pytest.raises(SpectrumError):
            resonances(S124, 4)


class TestExtendedResonances:
    def test_block_three_full_list(self):
        got = extended_resonances(S124, 3)
        assert len(got) == 14
        assert set(got) == {interleaved_to_pair(t) for t in R3_LISTED}

    def test_block_two(self):
        assert set(extended_resonances(S124, 2)) == {
            ((2, 0, 0), (0, 0, 0)), ((1, 0, 0), (1, 0, 0)), ((0, 0, 0), (2, 0, 0))}

    def test_block_one_empty(self):
        assert extended_resonances(S124, 1) == []

    @pytest.mark.parametrize("nu", [1, 2, 3])
    def test_power_oracle(self, nu):
        expected = oracles.brute_power_resonances((1, 2, 4), nu, True, degree_bound(S124))
        assert set(extended_resonances(S124, nu)) == expected
        expected = oracles.brute_power_resonances((1, 2, 4), nu, False, degree_bound(S124))
        assert set(resonances(S124, nu)) == expected

    def test_complex_eigenvalue(self):
        # lambda_1 = i/2, lambda_2 = 1/4 = lambda_1 * conj(lambda_1), lambda_2 != lambda_1^2 = -1/4
        s = Spectrum.exact([GaussRat(0, Fraction(1, 2)), Fraction(1, 4)])
        assert extended_resonances(s, 2) == [((1, 0), (1, 0))]
        assert resonances(s, 2) == []


class TestTangentIndices:
    def test_power_all_real(self):
        assert admissible_tangent_indices(S124) == [1, 2, 3]

    def test_complex_excluded(self):
        assert admissible_tangent_indices(Spectrum.exact([GaussRat(0, Fraction(1, 2)), Fraction(1, 4)])) == [2]

    def test_negative_real(self):
        assert admissible_tangent_indices(Spectrum.exact([Fraction(-1, 2), Fraction(1, 4)])) == [1, 2]


class TestValidation:
    def test_distinct(self):
        with pytest.raises(SpectrumError):
            Spectrum.exact([Fraction(1, 2), Fraction(1, 2)])

    def test_contracting(self):
        with pytest.raises(SpectrumError):
            Spectrum.exact([GaussRat(1, 1)])
        with pytest.raises(SpectrumError):
            Spectrum.power(Fraction(3, 2), (1,))

    def test_ordering(self):
        with pytest.raises(SpectrumError):
            Spectrum.exact([Fraction(1, 4), Fraction(1, 2)])
        with pytest.raises(SpectrumError):
            Spectrum.power(Fraction(1, 2), (2, 1))

    def test_block_dims(self):
        with pytest.raises(SpectrumError):
            Spectrum.power(Fraction(1, 2), (1, 2), (1,))


# -- properties on random exact spectra ---------------------------------------------

small_complex = st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(2, 5))


@st.composite
def exact_spectra(draw):
    """Small Gaussian-rational spectra, sometimes seeded with products so resonances occur."""
    m = draw(st.integers(1, 3))
    re, im, den = draw(small_complex)
    first = GaussRat(Fraction(re, den), Fraction(im, den))
    if first.abs2() == 0 or first.abs2() >= 1:
        first = GaussRat(Fraction(1, den))
    vals = [first]
    while len(vals) < m:
        kind = draw(st.sampled_from(["pow", "conjprod", "free"]))
        if kind == "pow":
            v = vals[-1] * vals[0]
        elif kind == "conjprod":
            v = vals[-1] * vals[0].conj()
        else:
            a, b, d = draw(small_complex)
            v = GaussRat(Fraction(a, d + 3), Fraction(b, d + 3))
        if v.abs2() == 0 or v.abs2() > vals[-1].abs2() or v in vals:
            v = vals[-1] * GaussRat(Fraction(1, 2))
        vals.append(v)
    return Spectrum.exact(vals)


@given(exact_spectra())
def test_soundness_and_tails(s):
    for nu in range(1, s.m + 1):
        for I, Ip in extended_resonances(s, nu):
            assert sum(I) + sum(Ip) >= 2
            assert s.monomial_value(I, Ip) == s.eigenvalue(nu)
            assert all(I[k] == 0 and Ip[k] == 0 for k in range(nu - 1, s.m))
        for I in resonances(s, nu):
            assert all(I[k] == 0 for k in range(nu - 1, s.m))


@given(exact_spectra())
def test_conjugation_symmetry_for_real_eigenvalues(s):
    for nu in admissible_tangent_indices(s):
        got = set(extended_resonances(s, nu))
        assert got == {(Ip, I) for I, Ip in got}


@given(exact_spectra())
def test_oracle_equivalence(s):
    vals = [(v.re, v.im) for v in s.values]
    assert degree_bound(s) == oracles.brute_degree_bound(vals)
    for nu in range(1, s.m + 1):
        assert set(resonances(s, nu)) == oracles.brute_resonances(vals, nu, False)
        assert set(extended_resonances(s, nu)) == {(I, Ip) for I, Ip in oracles.brute_resonances(vals, nu, True)}

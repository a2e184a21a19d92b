from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import holomorphic_jets
from crcontract.normalform import (
    NormalFormError,
    centralizer_member,
    homological_step,
    normalize,
    verify_conjugacy,
)
from crcontract.polyring import GaussRat, JetMap, RealPoly
from crcontract.spectrum import Spectrum, resonances

half, quarter, eighth = Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)
S12 = Spectrum.power(half, (1, 2))


def jet(n, order, *terms):
    """terms: (component, exponents, coeff)."""
    comps = [RealPoly.zero(n) for _ in range(n)]
    for j, exps, c in terms:
        comps[j] = comps[j] + RealPoly.monomial(n, exps, coeff=c)
    return JetMap(comps, order)


def one_d(*coeffs, order=None):
    return jet(1, order or len(coeffs), *[(0, (d,), c) for d, c in enumerate(coeffs, start=1) if c])


class TestCentralizer:
    def test_resonant_normal_form(self):
        g = jet(2, 2, (0, (1, 0), half), (1, (0, 1), quarter), (1, (2, 0), 3))
        assert centralizer_member(g, S12)

    def test_nonresonant_term(self):
        g = jet(2, 2, (0, (1, 0), half), (0, (2, 0), 1), (1, (0, 1), quarter))
        assert not centralizer_member(g, S12)

    def test_linear(self):
        assert centralizer_member(JetMap.diagonal([half, quarter], 3), S12)

    def test_wrong_linear_part(self):
        with pytest.raises(NormalFormError):
            centralizer_member(JetMap.diagonal([half, eighth], 3), S12)


class TestHomologicalStep:
    def test_one_dimensional(self):
        f = one_d(half, 1)
        s = Spectrum.exact([half])
        f2, h = homological_step(f, s, 2)
        # corrector 1 / (1/4 - 1/2) = -4
        assert h == one_d(1, -4)
        assert f2 == one_d(half, 0, order=2)
        assert not any(verify_conjugacy(f, h, f2, 2))

    def test_cubic_in_second_component(self):
        f = jet(2, 3, (0, (1, 0), half), (1, (0, 1), quarter), (1, (3, 0), 1))
        f2, h = homological_step(f, S12, 3)
        # corrector 1 / (1/8 - 1/4) = -8
        assert h == jet(2, 3, (0, (1, 0), 1), (1, (0, 1), 1), (1, (3, 0), -8))
        assert f2 == JetMap.diagonal([half, quarter], 3)
        assert not any(verify_conjugacy(f, h, f2, 3))

    def test_resonant_untouched(self):
        f = jet(2, 2, (0, (1, 0), half), (1, (0, 1), quarter), (1, (2, 0), 5))
        f2, h = homological_step(f, S12, 2)
        assert h == JetMap.identity(2, 2)
        assert f2 == f

    @given(st.data())
    def test_degree_isolation(self, data):
        f = data.draw(holomorphic_jets([GaussRat(half), GaussRat(quarter)], order=4))
        for d in range(2, 5):
            f2, _ = homological_step(f, S12, d)
            for j in range(2):
                lower = lambda key: key.degree < d
                assert f2.components[j].filter(lower) == f.components[j].filter(lower)
            f = f2


class TestNormalize:
    def test_koenigs_one_dimensional(self):
        res = normalize(one_d(half, 1, 1), Spectrum.exact([half]), 3)
        assert res.normal_form == JetMap.diagonal([half], 3)
        assert res.residual_zero

    def test_already_normal(self):
        f = jet(2, 2, (0, (1, 0), half), (1, (0, 1), quarter), (1, (2, 0), 7))
        res = normalize(f, S12)
        assert res.normal_form == f
        assert res.conjugator == JetMap.identity(2, 2)

    def test_keeps_resonant_removes_cubic(self):
        f = jet(2, 3, (0, (1, 0), half), (1, (0, 1), quarter), (1, (2, 0), 1), (1, (3, 0), 1))
        res = normalize(f, S12, 3)
        assert res.normal_form == jet(2, 3, (0, (1, 0), half), (1, (0, 1), quarter), (1, (2, 0), 1))
        assert res.residual_zero

    def test_default_order(self):
        assert normalize(JetMap.diagonal([half, quarter], 2), S12).order == 2
        s = Spectrum.power(half, (1, 2, 4))
        assert normalize(JetMap.diagonal(s.variable_eigenvalues(), 4), s).order == 4

    def test_mismatched_spectrum(self):
        with pytest.raises(NormalFormError):
            normalize(one_d(half, 1), S12)

    @given(st.data())
    def test_properties(self, data):
        f = data.draw(holomorphic_jets([GaussRat(half), GaussRat(quarter)], order=4))
        res = normalize(f, S12, 4)
        assert centralizer_member(res.normal_form, S12)
        assert not any(verify_conjugacy(f, res.conjugator, res.normal_form, 4))
        again = normalize(res.normal_form, S12, 4)
        assert again.normal_form == res.normal_form
        assert again.conjugator == JetMap.identity(2, 4)

    def test_block_layout(self):
        # two-dimensional first block: z1, z2 share lambda; z3 has lambda^2
        s = Spectrum.power(half, (1, 2), (2, 1))
        f = jet(3, 2, (0, (1, 0, 0), half), (1, (0, 1, 0), half), (2, (0, 0, 1), quarter),
                (2, (1, 1, 0), 3), (0, (0, 2, 0), 1))
        res = normalize(f, s, 2)
        # z1 z2 is resonant for the third coordinate; z2^2 in the first is not
        assert res.normal_form.components[2].coeff((1, 1, 0)) == GaussRat(3)
        assert res.normal_form.components[0].coeff((0, 2, 0)) == GaussRat(0)
        assert res.residual_zero
        assert resonances(s, 2) == [(2, 0)]


class TestVerifyConjugacy:
    def test_worked_pair(self):
        f, h, g = one_d(half, 1), one_d(1, -4), one_d(half, 0, order=2)
        assert not any(verify_conjugacy(f, h, g, 2))

    def test_sign_flip_breaks(self):
        f, h, g = one_d(half, 1), one_d(1, 4), one_d(half, 0, order=2)
        res = verify_conjugacy(f, h, g, 2)
        assert res[0].degree() == 2 and res[0] != 0

    def test_dimension_mismatch(self):
        with pytest.raises(NormalFormError):
            verify_conjugacy(one_d(half), JetMap.identity(2, 1), one_d(half))

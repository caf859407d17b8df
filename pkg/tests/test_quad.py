import pytest

from qtr.ntheory import legendre
from qtr.quad import SplittingType, fundamental_unit, splitting_type

from .conftest import pell_oracle, trial_division_is_prime


class TestFundamentalUnit:
    @pytest.mark.parametrize("ell,u,v", [(5, 1, 1), (13, 3, 1), (29, 5, 1)])
    def test_spot_values(self, ell, u, v):
        unit = fundamental_unit(ell)
        assert (unit.u, unit.v) == (u, v)

    @pytest.mark.parametrize("ell,u,v", [(37, 12, 2), (101, 20, 2), (197, 28, 2)])
    def test_even_coordinate_fields(self, ell, u, v):
        # no half-integer solution exists here; the minimal one is even
        unit = fundamental_unit(ell)
        assert (unit.u, unit.v) == (u, v)

    def test_identity_and_minimality_below_500(self):
        for ell in range(5, 500, 8):
            if not trial_division_is_prime(ell):
                continue
            unit = fundamental_unit(ell)
            assert unit.u**2 - ell * unit.v**2 == -4
            assert (unit.u, unit.v) == pell_oracle(ell, unit.v), ell

    def test_coordinates_positive(self):
        for ell in (5, 13, 29, 37, 53, 61, 101, 109, 149, 157, 173, 197):
            unit = fundamental_unit(ell)
            assert unit.u > 0 and unit.v > 0


class TestSplittingType:
    def test_examples(self):
        assert splitting_type(13, 37) is SplittingType.INERT
        assert splitting_type(13, 101) is SplittingType.SPLIT
        assert splitting_type(2, 53) is SplittingType.INERT
        assert splitting_type(37, 37) is SplittingType.RAMIFIED

    def test_reciprocity_agreement(self, panel_ells):
        # ell = 1 (mod 4): (r/ell) and (ell/r) must agree for odd r != ell
        for ell in panel_ells:
            for r in range(3, 300, 2):
                if not trial_division_is_prime(r) or r == ell:
                    continue
                forward = legendre(r, ell)
                backward = legendre(ell, r)
                assert forward == backward, (r, ell)
                expected = SplittingType.SPLIT if forward == 1 else SplittingType.INERT
                assert splitting_type(r, ell) is expected

    def test_two_always_inert(self, panel_ells):
        for ell in panel_ells:
            assert splitting_type(2, ell) is SplittingType.INERT

from fractions import Fraction

import pytest

from mckay.errors import SemanticError
from mckay.spectrum import (HighestWeight, aggregate, dirac_spectrum, spectrum_symmetry,
                            sphere_multiplicity, weyl_dim)

F = Fraction
H = F(1, 2)


def test_weyl_dim_examples():
    assert weyl_dim(HighestWeight((H, H, H))) == 1
    assert weyl_dim(HighestWeight((F(5), F(5)))) == 1
    for a in range(6):
        assert weyl_dim(HighestWeight((a + H, H))) == a + 1
    assert weyl_dim(HighestWeight((F(3, 2), H, H))) == 3


def test_weyl_dim_translation_invariant():
    for mu in [(F(7, 2), H, -H), (F(5, 2), F(3, 2), -F(9, 2), -F(9, 2))]:
        shifted = tuple(m + 1 for m in mu)
        assert weyl_dim(HighestWeight(mu)) == weyl_dim(HighestWeight(shifted))


def test_weyl_dim_known_u3_values():
    # dimensions of U(3) irreps: (1,0,0) -> 3, (1,1,0) -> 3, (2,0,0) -> 6, (2,1,0) -> 8
    assert [weyl_dim(HighestWeight(mu)) for mu in [(1, 0, 0), (1, 1, 0), (2, 0, 0), (2, 1, 0)]] == [3, 3, 6, 8]


def test_not_dominant():
    with pytest.raises(SemanticError, match="not dominant"):
        weyl_dim(HighestWeight((H, F(3, 2))))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_extremal_eigenvalues(n):
    totals = aggregate(dirac_spectrum(n, F(2 * n - 1, 2) + 3))
    assert min(ev for ev in totals if ev > 0) == F(2 * n - 1, 2)
    assert max(ev for ev in totals if ev < 0) == -F(2 * n - 1, 2)


def test_n2_small_multiplicities():
    totals = aggregate(dirac_spectrum(2, F(5, 2)))
    assert totals == {F(-5, 2): 6, F(-3, 2): 2, F(3, 2): 2, F(5, 2): 6}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_matches_sphere_closed_form(n):
    base = F(2 * n - 1, 2)
    totals = aggregate(dirac_spectrum(n, base + 8))
    for k in range(9):
        assert totals[base + k] == sphere_multiplicity(n, k)
        assert totals[-base - k] == sphere_multiplicity(n, k)
    assert set(totals) == {s * (base + k) for k in range(9) for s in (1, -1)}


def test_entries_are_spinor_and_outside_gap():
    for n in (2, 3, 4):
        for e in dirac_spectrum(n, F(2 * n - 1, 2) + 5):
            assert e.eigenvalue.denominator == 2
            assert abs(e.eigenvalue) >= F(2 * n - 1, 2)
            assert e.weight.is_spinor
            assert e.family in (1, 2, 3) and e.multiplicity > 0


def test_symmetry_examples():
    assert spectrum_symmetry(2, F(41, 2))
    assert spectrum_symmetry(3, F(25, 2))
    assert spectrum_symmetry(2, F(3, 2))
    assert aggregate(dirac_spectrum(2, F(3, 2))) == {F(-3, 2): 2, F(3, 2): 2}


def test_bad_arguments():
    with pytest.raises(SemanticError):
        dirac_spectrum(1, 10)
    with pytest.raises(SemanticError):
        dirac_spectrum(3, 2)


def test_no_duplicate_weights():
    entries = dirac_spectrum(4, F(31, 2))
    keys = [(e.weight.mu, e.eigenvalue) for e in entries]
    assert len(keys) == len(set(keys))

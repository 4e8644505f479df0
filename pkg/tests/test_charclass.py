"""Euler characteristics of standard varieties and invariant-package builders."""

import pytest

from dualis.charclass import (
    GRASSMANNIAN,
    PROJECTIVE_SPACE,
    QUADRIC,
    TruncatedSeries,
    chi_smooth_complete_intersection,
    chi_standard,
    hypersurface_package,
    linear_factor,
    linear_space_package,
    one_plus_h_power,
)
from dualis.errors import InvalidParams


class TestChiStandard:
    def test_projective_spaces(self):
        assert chi_standard(PROJECTIVE_SPACE, 8) == 9
        assert chi_standard(PROJECTIVE_SPACE, 0) == 1

    def test_quadrics(self):
        assert chi_standard(QUADRIC, 4) == 6
        assert chi_standard(QUADRIC, 3) == 4
        assert chi_standard(QUADRIC, 2) == 4
        assert chi_standard(QUADRIC, 1) == 2

    def test_grassmannian_cell_count(self):
        assert chi_standard(GRASSMANNIAN, 2, 6) == 15
        assert chi_standard(GRASSMANNIAN, 2, 4) == 6

    def test_invalid_params(self):
        with pytest.raises(InvalidParams):
            chi_standard(PROJECTIVE_SPACE, -1)
        with pytest.raises(InvalidParams):
            chi_standard(GRASSMANNIAN, 4, 4)
        with pytest.raises(InvalidParams):
            chi_standard("weird", 3)


class TestCompleteIntersections:
    def test_cubic_fourfold(self):
        assert chi_smooth_complete_intersection(5, [3]) == 27

    def test_quartic_k3(self):
        assert chi_smooth_complete_intersection(3, [4]) == 24

    def test_plane_curves(self):
        for d in range(2, 7):
            assert chi_smooth_complete_intersection(2, [d]) == -d * d + 3 * d

    def test_quadric_formula_against_series(self):
        for n in range(1, 9):
            assert chi_standard(QUADRIC, n) == chi_smooth_complete_intersection(
                n + 1, [2]
            )

    def test_two_quadrics_in_p3_is_elliptic(self):
        assert chi_smooth_complete_intersection(3, [2, 2]) == 0

    def test_invalid_params(self):
        with pytest.raises(InvalidParams):
            chi_smooth_complete_intersection(2, [1, 1, 1])
        with pytest.raises(InvalidParams):
            chi_smooth_complete_intersection(3, [])
        with pytest.raises(InvalidParams):
            chi_smooth_complete_intersection(3, [0])


class TestSeries:
    def test_inverse_is_exact(self):
        for n in (3, 5, 8):
            for d in (1, 2, 3, 7):
                order = n + 1
                numerator = one_plus_h_power(n + 1, order)
                factor = linear_factor(d, order)
                assert factor * factor.inverse() == TruncatedSeries.one(order)
                assert numerator * factor.inverse() * factor == numerator

    def test_inverse_needs_unit(self):
        with pytest.raises(InvalidParams):
            TruncatedSeries([0, 1], 3).inverse()


class TestPackages:
    def test_conic_package(self):
        pkg = hypersurface_package(2, 2)
        assert pkg.chi_slices == (0, 2, 2)
        assert pkg.c0m == 2
        pkg.validate_slices()

    def test_quadric_surface_package(self):
        pkg = hypersurface_package(3, 2)
        assert pkg.chi_slices == (0, 2, 2, 4)
        assert pkg.c0m == 4

    def test_cubic_fourfold_package(self):
        pkg = hypersurface_package(5, 3)
        assert pkg.chi_slices[5] == 27
        assert pkg.chi_slices[1] == 3
        pkg.validate_slices()

    def test_slice_invariants_hold_for_a_range(self):
        for n in (2, 3, 4, 5):
            for d in (1, 2, 3, 4):
                pkg = hypersurface_package(n, d)
                pkg.validate_slices()
                assert pkg.chi_slices[n - pkg.dim] == pkg.degree
                assert pkg.chi_slices[0] == 0

    def test_linear_space_packages(self):
        line = linear_space_package(2, 1)
        assert line.chi_slices == (0, 1, 2)
        point = linear_space_package(3, 0)
        assert point.chi_slices == (0, 0, 0, 1)
        plane = linear_space_package(3, 2)
        assert plane.chi_slices == (0, 1, 2, 3)
        for pkg in (line, point, plane):
            pkg.validate_slices()

    def test_hyperplane_package_matches_linear(self):
        assert hypersurface_package(4, 1).chi_slices == linear_space_package(4, 3).chi_slices

import pytest

from specfm.lattice import ABELIAN, K3, DivisorClass
from specfm.moduli import (
    ModuliDescriptor,
    double_fibration_check,
    fibration_dimensions,
    lagrangian_check,
    nahm_bijection_check,
    spectral_support_class,
)

GRID = range(2, 7)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        ModuliDescriptor(K3, 1, 3)
    with pytest.raises(ValueError):
        ModuliDescriptor(ABELIAN, 2, 1)


def test_support_class():
    assert spectral_support_class(ModuliDescriptor(K3, 2, 3)) == DivisorClass(2, 3)


def test_dimension_examples():
    dims = fibration_dimensions(ModuliDescriptor(K3, 2, 3))
    assert (dims.base_dim, dims.fibre_dim, dims.genus, dims.total_dim) == (3, 3, 3, 6)
    dims = fibration_dimensions(ModuliDescriptor(ABELIAN, 2, 3))
    assert (dims.base_dim, dims.fibre_dim, dims.genus, dims.total_dim) == (7, 7, 7, 14)
    dims = fibration_dimensions(ModuliDescriptor(K3, 2, 2))
    assert (dims.base_dim, dims.fibre_dim, dims.genus, dims.total_dim) == (1, 1, 1, 2)


def test_lagrangian_examples():
    assert lagrangian_check(ModuliDescriptor(K3, 2, 3))
    assert lagrangian_check(ModuliDescriptor(ABELIAN, 2, 3))
    m = ModuliDescriptor(ABELIAN, 3, 4)
    assert lagrangian_check(m)
    assert fibration_dimensions(m).genus == 13


def test_grid_identities_and_closed_forms():
    for surface in (K3, ABELIAN):
        for r in GRID:
            for k in GRID:
                dims = fibration_dimensions(ModuliDescriptor(surface, r, k))
                assert dims.base_dim == dims.fibre_dim == dims.genus
                assert dims.total_dim == 2 * dims.genus
                closed = 2 * (r * k - r * r + 1) if surface is K3 else 2 * r * k + 2
                assert dims.total_dim == closed


def test_nahm_bijection():
    assert nahm_bijection_check(ModuliDescriptor(ABELIAN, 2, 3))
    assert nahm_bijection_check(ModuliDescriptor(ABELIAN, 2, 2))
    for r in GRID:
        for k in GRID:
            assert nahm_bijection_check(ModuliDescriptor(ABELIAN, r, k))
    with pytest.raises(ValueError):
        nahm_bijection_check(ModuliDescriptor(K3, 2, 3))


def test_double_fibration():
    assert double_fibration_check(ModuliDescriptor(ABELIAN, 2, 3))
    assert double_fibration_check(ModuliDescriptor(ABELIAN, 4, 5))
    m = ModuliDescriptor(ABELIAN, 2, 2)
    assert double_fibration_check(m)
    assert fibration_dimensions(m).base_dim == 5
    with pytest.raises(ValueError):
        double_fibration_check(ModuliDescriptor(K3, 2, 3))


def test_genus_monotone_in_charge():
    for surface in (K3, ABELIAN):
        for r in GRID:
            genera = [
                fibration_dimensions(ModuliDescriptor(surface, r, k)).genus
                for k in GRID
            ]
            assert all(g2 > g1 for g1, g2 in zip(genera, genera[1:]))

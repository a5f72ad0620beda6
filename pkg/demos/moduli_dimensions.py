"""Dimension identities of the moduli fibration, tabulated.

The moduli space fibres over the family of spectral curves with fibres the
degree g - 1 line-bundle loci, so base and fibre dimensions both equal the
curve genus and the total is 2g: the fibres sit in half the dimension, which
is the numerical shadow of their being Lagrangian.  On the product torus the
rank/charge swap preserves the total and the two fibration structures share
a base dimension.
"""

from specfm import (
    ABELIAN,
    K3,
    ModuliDescriptor,
    double_fibration_check,
    fibration_dimensions,
    lagrangian_check,
    nahm_bijection_check,
)

for surface, name, closed_form in (
    (K3, "elliptic K3", lambda r, k: 2 * (r * k - r * r + 1)),
    (ABELIAN, "product torus", lambda r, k: 2 * r * k + 2),
):
    print(f"=== {name} ===")
    if surface is K3:
        print("(rows with r > k are formal: the lattice identity persists where the moduli are empty)")
    print(" r  k   base fibre genus total  2g  closed")
    for r in range(2, 7):
        for k in range(2, 7):
            d = fibration_dimensions(ModuliDescriptor(surface, r, k))
            assert lagrangian_check(ModuliDescriptor(surface, r, k))
            assert d.total_dim == 2 * d.genus == closed_form(r, k)
            print(
                f"{r:2d} {k:2d}   {d.base_dim:4d} {d.fibre_dim:5d} {d.genus:5d}"
                f" {d.total_dim:5d} {2*d.genus:3d}  {closed_form(r, k):4d}"
            )
    print()

print("product torus extras:")
for r, k in ((2, 3), (3, 5), (4, 4)):
    m = ModuliDescriptor(ABELIAN, r, k)
    swapped = ModuliDescriptor(ABELIAN, k, r)
    print(
        f"  (r,k)=({r},{k}): total {fibration_dimensions(m).total_dim}"
        f" = total of ({k},{r}) {fibration_dimensions(swapped).total_dim};"
        f" swap bijection {nahm_bijection_check(m)};"
        f" double fibration bases agree {double_fibration_check(m)}"
    )

"""Walls in the ample cone and how a polarisation dodges them.

A destabilising wall is an even class xi with -4c <= xi^2 < 0: polarisations
on the wall (pairing zero with xi) or on the wrong side of it (pairing with
the opposite sign from the fibre class) see different destabilisers than the
fibrewise picture, so the transform need not preserve stability there.  This
script enumerates the walls for growing charge bound c and watches the
minimal good polarisation sigma + N f climb.
"""

from specfm import (
    ABELIAN,
    FIBRE,
    K3,
    DivisorClass,
    find_suitable,
    intersect,
    is_suitable,
    wall_set,
)


def show(surface, name):
    print(f"=== {name} ===")
    for c in range(1, 9):
        walls = wall_set(c, surface).walls
        pretty = ", ".join(f"{w.a}s{w.b:+d}f" for w in walls) or "(none)"
        pol = find_suitable(c, surface)
        print(f"c={c}: {len(walls):2d} walls  [{pretty}]  -> sigma+{pol.b}f passes")
    print()


show(K3, "elliptic K3 with a section (sigma^2 = -2)")
show(ABELIAN, "product of two elliptic curves (sigma^2 = 0)")

print("A near miss on the K3 at c = 4:")
L = DivisorClass(1, 3)
ok, wall = is_suitable(L, 4, K3)
print(f"  sigma+3f suitable? {ok}; violating wall: {wall.a}s{wall.b:+d}f")
print(f"  (it pairs to {intersect(L, wall, K3)} with that wall, i.e. lies on it)")
print(f"  fibre side of the wall: f.xi = {intersect(FIBRE, wall, K3)}")
ok4, _ = is_suitable(DivisorClass(1, 4), 4, K3)
print(f"  one step up, sigma+4f suitable? {ok4}")

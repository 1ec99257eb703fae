"""Root system data for the simple types of rank at most 4.

Weights are tuples of integers: the coordinates of a weight on the basis of
fundamental weights.  Column j of the Cartan matrix is then the coordinate
vector of the simple root alpha_j, and the pairing of a weight with the simple
coroot alpha_i^vee is just coordinate i.  All length computations go through
the exact rational gram matrix of the fundamental weights; no floats anywhere.

>>> sys = rootSystem("A2")
>>> simpleRoot(sys, 0)
(2, -1)
>>> innerProduct(sys, (1, 1), (1, 1))
Fraction(2, 1)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

Weight = tuple[int, ...]

# caps the Weyl group size accepted by the toolkit (largest supported type F4)
WEYL_SIZE_CAP = 1152


def _path(n: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        c[i][i + 1] = -1
        c[i + 1][i] = -1
    return c


def _cartan_and_d(name: str) -> tuple[list[list[int]], tuple[int, ...]]:
    fam, rank = name[0], int(name[1:])
    if fam == "A" and 1 <= rank <= 4:
        return _path(rank), (1,) * rank
    if fam == "B" and 2 <= rank <= 4:
        # short simple root placed first, matching the rank-2 convention
        c = _path(rank)
        c[0][1] = -2
        return c, (1,) + (2,) * (rank - 1)
    if fam == "C" and 2 <= rank <= 4:
        c = _path(rank)
        c[1][0] = -2
        return c, (2,) + (1,) * (rank - 1)
    if fam == "D" and rank == 4:
        c = [[2 if i == j else 0 for j in range(4)] for i in range(4)]
        for i, j in ((0, 1), (1, 2), (1, 3)):
            c[i][j] = -1
            c[j][i] = -1
        return c, (1, 1, 1, 1)
    if fam == "G" and rank == 2:
        return [[2, -3], [-1, 2]], (1, 3)
    if fam == "F" and rank == 4:
        return [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]], (2, 2, 1, 1)
    raise ValueError(f"unsupported type {name!r}")


def _inverse(mat: list[list[Q]]) -> list[list[Q]]:
    # Gauss-Jordan over exact rationals; fine at rank <= 4
    n = len(mat)
    a = [row[:] + [Q(i == j) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = Q(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class RootSystem:
    name: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]      # cartan[i][j] = <alpha_j, alpha_i^vee>
    d: tuple[int, ...]                       # d[i] = (alpha_i, alpha_i)/2, short roots have d=1
    gram: tuple[tuple[Q, ...], ...]          # gram[i][j] = (omega_i, omega_j)
    cartanInv: tuple[tuple[Q, ...], ...]     # simple-root coordinates of weights


def rootSystem(name: str) -> RootSystem:
    cart, d = _cartan_and_d(name)
    n = len(cart)
    cinv = _inverse([[Q(x) for x in row] for row in cart])
    gram = tuple(tuple(d[i] * cinv[i][j] for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            assert gram[i][j] == gram[j][i], "symmetrizer mismatch"
    return RootSystem(
        name=name,
        rank=n,
        cartan=tuple(tuple(row) for row in cart),
        d=d,
        gram=gram,
        cartanInv=tuple(tuple(row) for row in cinv),
    )


def simpleRoot(sys: RootSystem, i: int) -> Weight:
    """Fundamental-weight coordinates of the i-th simple root (0-based)."""
    return tuple(sys.cartan[k][i] for k in range(sys.rank))


def rho(sys: RootSystem) -> Weight:
    return (1,) * sys.rank


def zero(sys: RootSystem) -> Weight:
    return (0,) * sys.rank


def fundamental(sys: RootSystem, i: int) -> Weight:
    return tuple(1 if k == i else 0 for k in range(sys.rank))


def addW(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def subW(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def negW(a: Weight) -> Weight:
    return tuple(-x for x in a)


def isDominant(lam: Weight) -> bool:
    return all(x >= 0 for x in lam)


def innerProduct(sys: RootSystem, lam: Weight, mu: Weight) -> Q:
    """W-invariant bilinear form, normalized so short roots have length^2 = 2."""
    g = sys.gram
    n = sys.rank
    return sum((g[i][j] * lam[i]) * mu[j] for i in range(n) for j in range(n))


def norm2(sys: RootSystem, lam: Weight) -> Q:
    return innerProduct(sys, lam, lam)


def rootCoords(sys: RootSystem, lam: Weight) -> tuple[Q, ...]:
    """Coordinates of lam on the simple-root basis (exact rationals)."""
    cinv = sys.cartanInv
    n = sys.rank
    return tuple(sum(cinv[i][j] * lam[j] for j in range(n)) for i in range(n))


def height(sys: RootSystem, lam: Weight) -> Q:
    return sum(rootCoords(sys, lam))


def dominanceLeq(sys: RootSystem, lam: Weight, mu: Weight) -> bool:
    """lam <= mu iff mu - lam is a nonnegative integer combination of simple roots."""
    coords = rootCoords(sys, subW(mu, lam))
    return all(c >= 0 and c.denominator == 1 for c in coords)


def positiveRoots(sys: RootSystem) -> list[Weight]:
    """All positive roots, as weights, found by closing the simple roots
    under the simple reflections."""
    simples = [simpleRoot(sys, i) for i in range(sys.rank)]
    seen = set(simples)
    queue = list(simples)
    while queue:
        beta = queue.pop()
        for i in range(sys.rank):
            # reflect: s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
            refl = subW(beta, tuple(beta[i] * x for x in simples[i]))
            if refl not in seen:
                seen.add(refl)
                queue.append(refl)
    pos = [b for b in seen if all(c >= 0 for c in rootCoords(sys, b))]
    pos.sort(key=lambda b: (height(sys, b), b))
    return pos


def corootPairing(sys: RootSystem, lam: Weight, beta: Weight) -> Q:
    """<lam, beta^vee> = 2 (lam, beta) / (beta, beta) for any root beta."""
    return 2 * innerProduct(sys, lam, beta) / norm2(sys, beta)

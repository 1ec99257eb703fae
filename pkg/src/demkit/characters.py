"""Sparse formal characters: the group ring of the weight lattice.

A Character maps weight tuples to nonzero integers.  Ring operations are
exact; coefficients are Python ints so nothing overflows silently.

>>> a = Character.monomial((1, 0))
>>> b = Character.monomial((0, 1), 2)
>>> sorted((a * b).terms.items())
[((1, 1), 2)]
"""
from __future__ import annotations

from .rootsystem import RootSystem, Weight, height, isDominant, norm2
from .weyl import WeylGroup

GClassExpansion = dict[Weight, int]   # keys dominant, values nonzero


class Character:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[Weight, int] | None = None):
        # invariant: no zero coefficients stored
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @staticmethod
    def monomial(w: Weight, c: int = 1) -> "Character":
        return Character({w: c} if c else {})

    @staticmethod
    def zero() -> "Character":
        return Character({})

    def coeff(self, w: Weight) -> int:
        return self.terms.get(w, 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.terms == other.terms

    def __add__(self, other: "Character") -> "Character":
        big, small = self.terms, other.terms
        if len(big) < len(small):
            big, small = small, big
        out = dict(big)
        for w, c in small.items():
            n = out.get(w, 0) + c
            if n:
                out[w] = n
            else:
                out.pop(w, None)
        r = Character.__new__(Character)
        r.terms = out
        return r

    def __neg__(self) -> "Character":
        r = Character.__new__(Character)
        r.terms = {w: -c for w, c in self.terms.items()}
        return r

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Character.zero()
            r = Character.__new__(Character)
            r.terms = {w: c * other for w, c in self.terms.items()}
            return r
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Weight, int] = {}
        for w1, c1 in a.items():
            for w2, c2 in b.items():
                key = tuple(x + y for x, y in zip(w1, w2))
                n = out.get(key, 0) + c1 * c2
                if n:
                    out[key] = n
                else:
                    del out[key]
        r = Character.__new__(Character)
        r.terms = out
        return r

    __rmul__ = __mul__

    def sortedItems(self) -> list[tuple[Weight, int]]:
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        return pretty(self)


def dual(f: Character) -> Character:
    """Character of the linear dual: negate every weight."""
    return Character({tuple(-x for x in w): c for w, c in f.terms.items()})


def weylActionChar(W: WeylGroup, w: int, f: Character) -> Character:
    m = W.mats[w]
    n = W.sys.rank
    out: dict[Weight, int] = {}
    for lam, c in f.terms.items():
        key = tuple(sum(m[k][j] * lam[j] for j in range(n)) for k in range(n))
        out[key] = out.get(key, 0) + c
    return Character(out)


def augment(f: Character) -> int:
    """Sum of all coefficients (the dimension of a genuine module's character)."""
    return sum(f.terms.values())


def extremalWeights(sys: RootSystem, f: Character) -> set[Weight]:
    if not f.terms:
        raise ValueError("zero character has no extremal weights")
    best = None
    out: set[Weight] = set()
    for w in f.terms:
        n = norm2(sys, w)
        if best is None or n > best:
            best = n
            out = {w}
        elif n == best:
            out.add(w)
    return out


def isInvariant(W: WeylGroup, f: Character) -> tuple[Weight, Weight] | None:
    """None if W-invariant, else a witnessing weight pair (lam, s_i lam)."""
    for i in range(W.sys.rank):
        si = W.rmulTable[0][i]
        g = weylActionChar(W, si, f)
        if g != f:
            for lam in f.terms.keys() | g.terms.keys():
                if f.coeff(lam) != g.coeff(lam):
                    return lam, W.act(si, lam)
    return None


def decomposeWeylBasis(W: WeylGroup, f: Character) -> GClassExpansion:
    """Expand a W-invariant character over the irreducible-character basis.

    Greedy: repeatedly strip the (height, lex)-largest dominant support weight.
    Each strip removes that weight and only introduces strictly lower ones, so
    the loop terminates with an exact expansion.
    """
    from . import demazure   # deferred: demazure builds on this module

    wit = isInvariant(W, f)
    if wit is not None:
        raise ValueError(f"character is not W-invariant: weights {wit[0]} vs {wit[1]}")
    sys = W.sys
    rem = dict(f.terms)
    out: GClassExpansion = {}
    while rem:
        lam = max(
            (w for w in rem if isDominant(w)),
            key=lambda w: (height(sys, w), w),
        )
        c = rem[lam]
        out[lam] = c
        for w, k in demazure.charNabla(W, lam).terms.items():
            n = rem.get(w, 0) - c * k
            if n:
                rem[w] = n
            else:
                rem.pop(w, None)
    return out


def expandGClass(W: WeylGroup, coeffs: GClassExpansion) -> Character:
    """Inverse of decomposeWeylBasis: assemble the invariant character."""
    from . import demazure

    total = Character.zero()
    for lam, c in coeffs.items():
        total = total + demazure.charNabla(W, lam) * c
    return total


# -- serialization ------------------------------------------------------------

def charToJSON(f: Character) -> list[dict]:
    return [{"w": list(w), "c": c} for w, c in f.sortedItems()]


def charFromJSON(data: list[dict]) -> Character:
    return Character({tuple(d["w"]): d["c"] for d in data})


def _monome(w: Weight, c: int, tight: bool) -> str:
    body = "e[" + ",".join(str(x) for x in w) + "]"
    mag = abs(c)
    if mag == 1:
        return body
    return f"{mag}{body}" if tight else f"{mag}·{body}"


def pretty(f: Character) -> str:
    """Human form, lex-sorted: "e[1,-1] + 2·e[0,0]"."""
    if not f.terms:
        return "0"
    parts = []
    for i, (w, c) in enumerate(f.sortedItems()):
        sign = "-" if c < 0 else "+"
        mono = _monome(w, c, tight=False)
        if i == 0:
            parts.append(mono if c > 0 else "-" + mono)
        else:
            parts.append(f" {sign} {mono}")
    return "".join(parts)


def compact(f: Character) -> str:
    """CSV cell form, lex-sorted: "e[1,-1]+2e[0,0]"."""
    if not f.terms:
        return "0"
    parts = []
    for i, (w, c) in enumerate(f.sortedItems()):
        mono = _monome(w, c, tight=True)
        if c < 0:
            parts.append("-" + mono)
        elif i > 0:
            parts.append("+" + mono)
        else:
            parts.append(mono)
    return "".join(parts)


def gexpToJSON(coeffs: GClassExpansion) -> list[dict]:
    return [{"weight": list(w), "c": c} for w, c in sorted(coeffs.items())]

"""Demazure operators and the characters built from them.

The push-pull operator for a simple reflection acts on monomials by a
three-case geometric-series formula; everything else here (orbit characters,
section characters over unions of Schubert varieties, their twisted variants)
is a fold of that one step.
"""
from __future__ import annotations

from .characters import Character
from .rootsystem import Weight, isDominant, rho, simpleRoot
from .weyl import WeylGroup

LowerSet = tuple[int, ...]   # canonical antichain of Bruhat-maximal elements


def demStep(W: WeylGroup, i: int, f: Character) -> Character:
    """One simple push-pull.  Idempotent; image = s_i-invariants."""
    alpha = simpleRoot(W.sys, i)
    n_ = len(alpha)
    out: dict[Weight, int] = {}

    def bump(w: Weight, c: int) -> None:
        v = out.get(w, 0) + c
        if v:
            out[w] = v
        else:
            del out[w]

    for lam, c in f.terms.items():
        n = lam[i]   # pairing with the i-th simple coroot
        if n >= 0:
            for k in range(n + 1):
                bump(tuple(lam[j] - k * alpha[j] for j in range(n_)), c)
        elif n <= -2:
            for k in range(1, -n):
                bump(tuple(lam[j] + k * alpha[j] for j in range(n_)), -c)
        # n == -1 contributes nothing
    return Character(out)


def demWord(W: WeylGroup, word: tuple[int, ...], f: Character) -> Character:
    """Compose steps for a word i1..ik, rightmost letter applied first."""
    for i in reversed(word):
        f = demStep(W, i, f)
    return f


def demElt(W: WeylGroup, w: int, f: Character) -> Character:
    """Operator of a group element via any reduced word (canonical one here)."""
    return demWord(W, W.canonicalWord(w), f)


def _demMono(W: WeylGroup, w: int, lam: Weight) -> Character:
    key = ("dem", w, lam)
    r = W.memo.get(key)
    if r is None:
        r = demElt(W, w, Character.monomial(lam))
        W.memo[key] = r
    return r


def eulerChar(W: WeylGroup, f: Character) -> Character:
    """Apply the full-group operator termwise (it is linear), with a
    per-monomial cache.  Output is W-invariant."""
    total = Character.zero()
    for lam, c in f.terms.items():
        total = total + _demMono(W, W.w0, lam) * c
    return total


def charNabla(W: WeylGroup, lam: Weight) -> Character:
    """Character of the irreducible with highest weight lam (dominant)."""
    if not isDominant(lam):
        raise ValueError(f"highest weight must be dominant, got {lam}")
    return _demMono(W, W.w0, lam)


def charP(W: WeylGroup, lam: Weight) -> Character:
    """Sections over the Schubert variety selected by lam's orbit position."""
    dom, w = W.toDominant(lam)
    return demElt(W, w, Character.monomial(dom))


# -- lower sets in Bruhat order ----------------------------------------------

def lowerSet(W: WeylGroup, elems) -> LowerSet:
    """Canonical antichain generating the same downward-closed set."""
    es = set(elems)
    return tuple(sorted(
        u for u in es
        if not any(v != u and W.bruhatLeq(u, v) for v in es)
    ))


def lowerSetMask(W: WeylGroup, s: LowerSet) -> int:
    m = 0
    for u in s:
        m |= W.bruhatBits[u]
    return m


def antichainFromMask(W: WeylGroup, mask: int) -> LowerSet:
    below = 0
    elems = []
    m = mask
    while m:
        low = m & -m
        u = low.bit_length() - 1
        elems.append(u)
        below |= W.bruhatBits[u] ^ low
        m ^= low
    return tuple(u for u in elems if not (below >> u) & 1)


def inLowerSet(W: WeylGroup, s: LowerSet, u: int) -> bool:
    return any(W.bruhatLeq(u, m) for m in s)


def boundary(W: WeylGroup, w: int) -> LowerSet:
    """Everything strictly below w, as a lower set: generated by the covers."""
    return tuple(sorted(W.covers(w)))


def charH0LowerSet(W: WeylGroup, s: LowerSet, lam: Weight) -> Character:
    """Sections of the lam-line-bundle over a union of Schubert varieties.

    Inclusion-exclusion on the generating antichain: split off the ShortLex
    largest generator m, then sections over the union = sections over the rest
    + sections over m's piece - sections over the overlap.
    """
    s = lowerSet(W, s)
    key = ("h0", s, lam)
    r = W.memo.get(key)
    if r is not None:
        return r
    if not s:
        r = Character.zero()
    elif len(s) == 1:
        r = _demMono(W, s[0], lam)
    else:
        m = max(s, key=W.orderPos)
        rest = tuple(u for u in s if u != m)
        inter = antichainFromMask(W, lowerSetMask(W, rest) & W.bruhatBits[m])
        r = (charH0LowerSet(W, rest, lam) + _demMono(W, m, lam)
             - charH0LowerSet(W, inter, lam))
    W.memo[key] = r
    return r


# -- the quotient-by-boundary characters ---------------------------------------

def charQ(W: WeylGroup, lam: Weight) -> Character:
    """Sections over the Schubert cell closure minus its boundary sections:
    the character of the layer attached to lam."""
    key = ("Q", lam)
    r = W.memo.get(key)
    if r is None:
        dom, w = W.toDominant(lam)
        r = demElt(W, w, Character.monomial(dom)) - charH0LowerSet(W, boundary(W, w), dom)
        W.memo[key] = r
    return r


def _twistStep(W: WeylGroup, i: int, f: Character) -> Character:
    rh = rho(W.sys)
    alpha = simpleRoot(W.sys, i)
    n = len(alpha)
    si_rho = tuple(rh[j] - alpha[j] for j in range(n))
    g = demStep(W, i, Character.monomial(si_rho) * f)
    neg_rho = tuple(-x for x in rh)
    return Character.monomial(neg_rho) * g


def charQviaTwist(W: WeylGroup, lam: Weight) -> Character:
    """Same layer character by the twisted-operator route: compose the
    rho-shifted steps along the canonical word, rightmost letter first."""
    dom, w = W.toDominant(lam)
    f = Character.monomial(dom)
    for i in reversed(W.canonicalWord(w)):
        f = _twistStep(W, i, f)
    return f


def charSections(W: WeylGroup, s: LowerSet, lam: Weight) -> Character:
    """Sum of layer characters over the distinct orbit weights u*lam for u in
    the lower set generated by s."""
    s = lowerSet(W, s)
    mask = lowerSetMask(W, s)
    seen: set[Weight] = set()
    m = mask
    while m:
        low = m & -m
        u = low.bit_length() - 1
        m ^= low
        seen.add(W.act(u, lam))
    total = Character.zero()
    for mu in sorted(seen):
        total = total + charQ(W, mu)
    return total


def charQhat(W: WeylGroup, lam: Weight, piP: tuple[int, ...]) -> Character:
    """Layer character pushed to the parabolic chosen by piP: apply the
    longest parabolic operator, landing in the parabolic invariants."""
    key = ("Qhat", lam, piP)
    r = W.memo.get(key)
    if r is None:
        _, _, w0p = W.parabolicData(piP)
        r = demElt(W, w0p, charQ(W, lam))
        W.memo[key] = r
    return r

"""Euler pairing, triangular transition matrices, and exceptional-class checks.

Everything here is a statement about exact integer characters: the pairing is
the full-group Demazure operator applied to a product, the transition entries
are differences of section characters over unions of Schubert varieties, and
the class constructions project dualized section characters onto a chosen
half of a mixed basis.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .characters import (
    Character,
    augment,
    charToJSON,
    compact,
    decomposeWeylBasis,
    dual,
    weylActionChar,
)
from .demazure import (
    boundary,
    charNabla,
    charP,
    charQ,
    charQhat,
    charSections,
    demStep,
    eulerChar,
    lowerSet,
)
from .rootsystem import Weight, fundamental, isDominant, negW, rho, subW, zero
from .steinberg import PSTAR, Q, QHAT, steinbergDecomposeChar
from .weyl import WeylGroup


def eulerPair(W: WeylGroup, f: Character, g: Character) -> Character:
    """Euler-characteristic pairing of two classes; symmetric, invariant."""
    return eulerChar(W, f * g)


@dataclass
class TransitionMatrix:
    rowOrder: list[int]
    colOrder: list[int]
    entries: list[list[Character]]


def wordStr(W: WeylGroup, w: int) -> str:
    word = W.canonicalWord(w)
    return "e" if not word else " ".join(f"s{i + 1}" for i in word)


def matrixToJSON(W: WeylGroup, m: TransitionMatrix) -> dict:
    return {
        "rows": [wordStr(W, w) for w in m.rowOrder],
        "cols": [wordStr(W, w) for w in m.colOrder],
        "entries": [[charToJSON(c) for c in row] for row in m.entries],
    }


def matrixToCSV(W: WeylGroup, m: TransitionMatrix) -> str:
    lines = ["," + ",".join(wordStr(W, w) for w in m.colOrder)]
    for w, row in zip(m.rowOrder, m.entries):
        lines.append(wordStr(W, w) + "," + ",".join(compact(c) for c in row))
    return "\n".join(lines) + "\n"


def _warmPQ(W: WeylGroup) -> tuple[dict[int, Character], dict[int, Character]]:
    ps = {}
    qs = {}
    for v in W.elements():
        ev = W.steinbergWeight(v)
        ps[v] = charP(W, negW(ev))
        qs[v] = charQ(W, ev)
    return ps, qs


def indPQMatrix(W: WeylGroup, jobs: int = 1) -> TransitionMatrix:
    """Pairing table of the two section-character families, rows and columns
    in the fixed length-then-word order."""
    order = W.totalOrderBuild()
    ps, qs = _warmPQ(W)

    def entry(vw):
        v, w = vw
        return eulerPair(W, ps[v], qs[w])

    pairs = [(v, w) for v in order for w in order]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            flat = list(ex.map(entry, pairs))
    else:
        flat = [entry(p) for p in pairs]
    n = len(order)
    entries = [flat[i * n : (i + 1) * n] for i in range(n)]
    return TransitionMatrix(list(order), list(order), entries)


def indPQCheck(W: WeylGroup, m: TransitionMatrix) -> list[tuple[str, bool, str]]:
    """Unitriangularity: diagonal 1, zero wherever the column element does not
    lie below the row element."""
    one = Character.monomial(zero(W.sys))
    checks = []
    ok = True
    witness = ""
    for i, v in enumerate(m.rowOrder):
        for j, w in enumerate(m.colOrder):
            e = m.entries[i][j]
            if v == w and e != one:
                ok, witness = False, f"diagonal at {wordStr(W, v)}: {compact(e)}"
                break
            if not W.bruhatLeq(w, v) and e:
                ok, witness = False, f"({wordStr(W, v)},{wordStr(W, w)}): {compact(e)}"
                break
        if not ok:
            break
    checks.append(("indpq-unitriangular", ok, witness))
    return checks


# -- transition matrices against the Schubert bases ----------------------------

def betaEntry(W: WeylGroup, v: int, w: int) -> Character:
    """Expansion coefficient of the v-th layer class over the twisted
    structure sheaves of the opposite Schubert cells."""
    theta = W.act(v, W.steinbergWeight(v))
    lam = negW(W.act(W.w0, theta))
    assert isDominant(lam)
    vw0 = W.mul(W.inverse(v), W.w0)
    ww0 = W.mul(w, W.w0)
    top = W.demazureProduct(ww0, vw0)
    first = charSections(W, (top,), lam)
    zs = lowerSet(W, [W.demazureProduct(z, vw0) for z in W.covers(ww0)])
    return first - charSections(W, zs, lam)


def alphaEntry(W: WeylGroup, v: int, w: int) -> Character:
    """Expansion coefficient of the v-th dual-section class over the Schubert
    basis, computed on the opposite Borel side and carried back by the longest
    element."""
    lam = W.act(v, W.steinbergWeight(v))
    assert isDominant(lam)
    u = W.mul(W.mul(W.w0, w), W.w0)
    vi = W.inverse(v)
    top = W.demazureProduct(u, vi)
    first = charSections(W, (top,), lam)
    zs = lowerSet(W, [W.demazureProduct(u, z) for z in W.covers(vi)])
    return weylActionChar(W, W.w0, first - charSections(W, zs, lam))


def triangularityChecks(
    W: WeylGroup, vs, ws
) -> list[tuple[str, bool, str]]:
    """Zero pattern and monomial corners for both transition matrices."""
    checks = []
    okz, wz = True, ""
    okc, wc = True, ""
    for v in vs:
        ev = W.steinbergWeight(v)
        vev = W.act(v, ev)
        vw0 = W.mul(v, W.w0)
        corner_a = alphaEntry(W, v, vw0)
        if corner_a != Character.monomial(vev):
            okc, wc = False, f"alpha corner {wordStr(W, v)}: {compact(corner_a)}"
        corner_b = betaEntry(W, v, vw0)
        if corner_b != Character.monomial(negW(vev)):
            okc, wc = False, f"beta corner {wordStr(W, v)}: {compact(corner_b)}"
        for w in ws:
            if not W.bruhatLeq(w, vw0) and alphaEntry(W, v, w):
                okz, wz = False, f"alpha ({wordStr(W, v)},{wordStr(W, w)})"
            if not W.bruhatLeq(vw0, w) and betaEntry(W, v, w):
                okz, wz = False, f"beta ({wordStr(W, v)},{wordStr(W, w)})"
    checks.append(("alpha-beta-corners", okc, wc))
    checks.append(("alpha-beta-zero-pattern", okz, wz))
    return checks


def orthogonalityCheck(W: WeylGroup) -> list[tuple[str, bool, str]]:
    """The two transition matrices multiply back to the pairing table."""
    ps, qs = _warmPQ(W)
    alphas = {
        (w, y): alphaEntry(W, w, y) for w in W.elements() for y in W.elements()
    }
    betas = {
        (v, y): betaEntry(W, v, y) for v in W.elements() for y in W.elements()
    }
    for v in W.elements():
        for w in W.elements():
            total = Character.zero()
            for y in W.elements():
                total = total + alphas[(w, y)] * betas[(v, y)]
            ind = eulerPair(W, ps[v], qs[w])
            if total != ind:
                return [(
                    "orthogonality",
                    False,
                    f"({wordStr(W, v)},{wordStr(W, w)}): "
                    f"sum {compact(total)} vs pairing {compact(ind)}",
                )]
    return [("orthogonality", True, "")]


# -- exceptional classes --------------------------------------------------------

def xClass(W: WeylGroup, p: int, order: list[int] | None = None) -> Character:
    """Project the dualized section character at p onto the layer classes at
    or after p: the K-class of the exceptional object attached to p."""
    order = W.totalOrderBuild() if order is None else order
    pos = {w: k for k, w in enumerate(order)}
    choices = {v: (Q if pos[v] >= pos[p] else PSTAR) for v in W.elements()}
    raw = steinbergDecomposeChar(W, dual(charP(W, negW(W.steinbergWeight(p)))), choices)
    out = Character.zero()
    for v, coef in raw.items():
        if pos[v] >= pos[p]:
            out = out + coef * charQ(W, W.steinbergWeight(v))
    return out


def gramCheck(
    W: WeylGroup, order: list[int] | None = None
) -> tuple[list[tuple[str, bool, str]], dict[tuple[int, int], Character]]:
    """Diagonal-1 and upper-zero conditions on the class pairing table.
    Entries strictly below the diagonal are returned unconstrained."""
    order = W.totalOrderBuild() if order is None else order
    pos = {w: k for k, w in enumerate(order)}
    classes = {p: xClass(W, p, order) for p in order}
    one = Character.monomial(zero(W.sys))
    below: dict[tuple[int, int], Character] = {}
    ok, witness = True, ""
    for v in order:
        for w in order:
            g = eulerPair(W, dual(classes[v]), classes[w])
            if v == w and g != one:
                ok, witness = False, f"diagonal {wordStr(W, v)}: {compact(g)}"
            elif pos[w] > pos[v] and g:
                ok, witness = False, f"({wordStr(W, v)},{wordStr(W, w)}): {compact(g)}"
            elif pos[w] < pos[v]:
                below[(v, w)] = g
    return [("xclass-gram", ok, witness)], below


def sameLengthPairReport(W: WeylGroup, order: list[int] | None = None) -> list[dict]:
    """Euler pairings between distinct classes of equal length, emitted for
    inspection only; nothing is asserted about their values."""
    order = W.totalOrderBuild() if order is None else order
    classes = {p: xClass(W, p, order) for p in order}
    rows = []
    for v in order:
        for w in order:
            if v != w and W.length[v] == W.length[w]:
                g = eulerPair(W, dual(classes[v]), classes[w])
                rows.append({
                    "v": wordStr(W, v),
                    "w": wordStr(W, w),
                    "pairing": charToJSON(g),
                })
    return rows


def xHatClass(
    W: WeylGroup,
    p: int,
    piP: tuple[int, ...],
    order: list[int] | None = None,
) -> Character:
    """Parabolic analogue: expand over the minimal coset representatives with
    parabolic layer characters in the upper half.  Coefficients away from the
    minimal representatives must cancel, and that cancellation is checked."""
    wp, minimal, w0p = W.parabolicData(piP)
    if p not in minimal:
        raise ValueError(f"element {wordStr(W, p)} is not a minimal coset representative")
    order = W.totalOrderBuild() if order is None else order
    pos = {w: k for k, w in enumerate(order)}
    minset = set(minimal)
    choices = {
        v: (QHAT if v in minset and pos[v] >= pos[p] else PSTAR)
        for v in W.elements()
    }
    raw = steinbergDecomposeChar(
        W, dual(charP(W, negW(W.steinbergWeight(p)))), choices, piP
    )
    stray = {v for v in raw if v not in minset}
    if stray:
        raise AssertionError(
            f"nonzero coefficients outside the minimal representatives: {sorted(stray)}"
        )
    out = Character.zero()
    for v, coef in raw.items():
        if pos[v] >= pos[p]:
            out = out + coef * charQhat(W, W.steinbergWeight(v), piP)
    return out


def parabolicChecks(
    W: WeylGroup, piP: tuple[int, ...], order: list[int] | None = None
) -> list[tuple[str, bool, str]]:
    """(a) the parabolic pairing table restricted to minimal representatives
    matches the full-flag one; (b) the parabolic classes coincide with the
    plain ones."""
    wp, minimal, w0p = W.parabolicData(piP)
    checks = []
    ok, witness = True, ""
    for v in minimal:
        pv = charP(W, negW(W.steinbergWeight(v)))
        for w in minimal:
            ew = W.steinbergWeight(w)
            lhs = eulerPair(W, pv, charQhat(W, ew, piP))
            rhs = eulerPair(W, pv, charQ(W, ew))
            if lhs != rhs:
                ok, witness = False, (
                    f"({wordStr(W, v)},{wordStr(W, w)}): "
                    f"{compact(lhs)} vs {compact(rhs)}"
                )
    checks.append(("parabolic-ind-matches-borel", ok, witness))
    ok, witness = True, ""
    for p in minimal:
        if xHatClass(W, p, piP, order) != xClass(W, p, order):
            ok, witness = False, f"class mismatch at {wordStr(W, p)}"
    checks.append(("parabolic-classes-match", ok, witness))
    return checks


def dualConjectureCheck(W: WeylGroup, v: int) -> dict:
    """Asserted: the Euler characteristic of the single exponent built from a
    pair of opposite-corner head weights is the predicted sign.  Reported
    only: the same sign for the full product of section characters."""
    ev = W.steinbergWeight(v)
    w0v = W.mul(W.w0, v)
    ew0v = W.steinbergWeight(w0v)
    exponent = subW(subW(ew0v, ev), rho(W.sys))
    sign = (-1) ** W.length[w0v]
    lhs = eulerChar(W, Character.monomial(exponent))
    expected = Character.monomial(zero(W.sys), sign)
    if lhs != expected:
        raise AssertionError(
            f"sign identity fails at {wordStr(W, v)}: {compact(lhs)} vs {compact(expected)}"
        )
    strong = eulerChar(
        W,
        charP(W, negW(ev))
        * charQ(W, ew0v)
        * Character.monomial(negW(rho(W.sys))),
    )
    return {
        "v": wordStr(W, v),
        "identity": "pass",
        "conjectureHolds": strong == expected,
        "pairingValue": charToJSON(strong),
    }


# -- rank-2 catalogue ------------------------------------------------------------

_STEINBERG_LISTS = {
    "A2": {(-1, -1), (-1, 0), (0, -1), (-1, 1), (1, -1), (0, 0)},
    "B2": {(-1, -1), (-1, 0), (0, -1), (-2, 1), (1, -1), (-1, 1), (2, -1), (0, 0)},
    "G2": {(-1, -1), (-1, 0), (0, -1), (-1, 1), (1, -1), (2, -1), (-2, 1),
           (3, -2), (-3, 2), (3, -1), (-3, 1), (0, 0)},
}

# nabla-filtration factor lists for products of small irreducibles, rank 2
_TENSOR_LISTS = {
    "A2": [
        (((1, 0), (1, 0)), {(2, 0): 1, (0, 1): 1}),
        (((0, 1), (0, 1)), {(1, 0): 1, (0, 2): 1}),
        (((1, 0), (2, 0)), {(3, 0): 1, (1, 1): 1}),
        (((0, 1), (0, 2)), {(0, 3): 1, (1, 1): 1}),
        (((1, 0), (0, 1)), {(1, 1): 1, (0, 0): 1}),
        (((1, 0), (1, 1)), {(2, 1): 1, (1, 0): 1, (0, 2): 1}),
    ],
    "B2": [
        (((1, 0), (1, 0)), {(2, 0): 1, (0, 1): 1, (0, 0): 1}),
        (((1, 0), (0, 1)), {(1, 1): 1, (1, 0): 1}),
    ],
    "G2": [
        (((1, 0), (0, 1)), {(1, 1): 1, (2, 0): 1, (1, 0): 1}),
        (((1, 0), (1, 0)), {(2, 0): 1, (0, 1): 1, (1, 0): 1, (0, 0): 1}),
    ],
}


# dimensions of the two fundamental irreducibles in each rank-2 type
_FUND_DIMS = {"A2": (3, 3), "B2": (4, 5), "G2": (7, 14)}


def _tensorListCheck(W: WeylGroup) -> tuple[str, bool, str]:
    ok, witness = True, ""
    for (a, b), want in _TENSOR_LISTS[W.sys.name]:
        got = decomposeWeylBasis(W, charNabla(W, a) * charNabla(W, b))
        if got != want:
            ok, witness = False, f"{a}x{b}: {got}"
    return ("tensor-filtration-lists", ok, witness)


def tensorDecompCheck(W: WeylGroup) -> list[tuple[str, bool, str]]:
    """Fundamental dimensions and product filtration lists, rank 2 only."""
    name = W.sys.name
    if name not in _TENSOR_LISTS:
        raise ValueError(f"reference lists exist for A2/B2/G2, not {name}")
    checks = []
    ok, witness = True, ""
    for i, want in enumerate(_FUND_DIMS[name]):
        got = augment(charNabla(W, fundamental(W.sys, i)))
        if got != want:
            ok, witness = False, f"dim chi(omega_{i + 1}) = {got}, expected {want}"
    checks.append(("fundamental-dimensions", ok, witness))
    checks.append(_tensorListCheck(W))
    return checks


def rank2BundleChecks(W: WeylGroup) -> list[tuple[str, bool, str]]:
    """Rank-2 catalogue: the two-step bundle character, the filtration factor
    lists, and the Steinberg weight lists."""
    name = W.sys.name
    if name not in _STEINBERG_LISTS:
        raise ValueError(f"rank-2 catalogue covers A2/B2/G2, not {name}")
    checks = []
    if name == "B2":
        psi = charNabla(W, (1, 0)) - Character.monomial((1, 0))
        got = demStep(W, 0, psi)
        want = Character.monomial((-1, 0)) + Character.monomial((1, -1))
        checks.append((
            "two-step-bundle-character",
            got == want,
            "" if got == want else compact(got),
        ))
    checks.append(_tensorListCheck(W))
    got_set = {W.steinbergWeight(v) for v in W.elements()}
    want_set = _STEINBERG_LISTS[name]
    checks.append((
        "steinberg-weight-list",
        got_set == want_set,
        "" if got_set == want_set else str(sorted(got_set ^ want_set)),
    ))
    return checks


def steinbergListCheck(W: WeylGroup) -> list[tuple[str, bool, str]]:
    name = W.sys.name
    if name not in _STEINBERG_LISTS:
        raise ValueError(f"reference lists exist for A2/B2/G2, not {name}")
    got = {W.steinbergWeight(v) for v in W.elements()}
    want = _STEINBERG_LISTS[name]
    return [(
        "steinberg-weight-list",
        got == want,
        "" if got == want else str(sorted(got ^ want)),
    )]

"""Buchberger's algorithm with lineage tracking.

A lineage records where a basis element came from: generator ``i`` has
lineage ``i`` and the remainder of ``S(f, g)`` has lineage
``(lineage(f), lineage(g))``. Lineages are plain ints and nested 2-tuples.
"""

import heapq
import re
from collections import deque
from dataclasses import dataclass, field

from .poly import GeneratorSet, divides, lcm, normal_form, s_polynomial

__all__ = [
    "GroebnerBasisResult", "Certificate", "buchberger", "minimalize", "reduce",
    "reduced_groebner_basis", "is_groebner_basis", "longest_lineage",
    "format_lineage", "parse_lineage", "lineage_depth", "lineage_leaves",
    "initial_monomials", "minimal_monomials",
]

STRATEGIES = ("first", "normal")


# ---------------------------------------------------------------- lineages

def format_lineage(lin):
    """``((0,1),0)``-style text for a lineage."""
    if isinstance(lin, tuple):
        return f"({format_lineage(lin[0])},{format_lineage(lin[1])})"
    return str(lin)


_LIN_TOKEN = re.compile(r"\s*(\d+|[(),])")


def parse_lineage(text):
    tokens = _LIN_TOKEN.findall(text)
    if "".join(tokens) != re.sub(r"\s+", "", text):
        raise ValueError(f"bad lineage {text!r}")
    pos = 0

    def parse():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            left = parse()
            if tokens[pos] != ",":
                raise ValueError(f"bad lineage {text!r}")
            pos += 1
            right = parse()
            if tokens[pos] != ")":
                raise ValueError(f"bad lineage {text!r}")
            pos += 1
            return (left, right)
        if tok.isdigit():
            return int(tok)
        raise ValueError(f"bad lineage {text!r}")

    try:
        out = parse()
    except IndexError:
        raise ValueError(f"bad lineage {text!r}") from None
    if pos != len(tokens):
        raise ValueError(f"bad lineage {text!r}")
    return out


def lineage_depth(lin):
    if isinstance(lin, tuple):
        return 1 + max(lineage_depth(lin[0]), lineage_depth(lin[1]))
    return 0


def lineage_leaves(lin):
    if isinstance(lin, tuple):
        return lineage_leaves(lin[0]) + lineage_leaves(lin[1])
    return 1


# ---------------------------------------------------------------- results

@dataclass
class GroebnerBasisResult:
    """Basis polynomials paired with their lineages.

    ``stats`` counts processed pairs (``pairs``), reductions to zero
    (``zero_reductions``), elements added (``additions``) and pairs
    dropped by the optional criteria (``skipped``).
    """

    elements: list
    ring: object
    minimal: bool = False
    reduced: bool = False
    stats: dict = field(default_factory=dict)

    @property
    def polynomials(self):
        return [p for p, _ in self.elements]

    @property
    def lineages(self):
        return [lin for _, lin in self.elements]

    def __len__(self):
        return len(self.elements)

    def initial_monomials(self):
        return [p.LM for p, _ in self.elements]


@dataclass
class Certificate:
    """Outcome of :func:`is_groebner_basis`; truthy when the check passed.

    On failure ``kind`` is ``"s-pair"`` (``index`` a pair of positions in the
    candidate) or ``"generator"`` (``index`` a generator position), and
    ``remainder`` is the nonzero normal form that witnesses the failure.
    """

    ok: bool
    kind: str = None
    index: object = None
    remainder: object = None

    def __bool__(self):
        return self.ok


def _generators(F):
    if isinstance(F, GeneratorSet):
        return list(F.generators), F.ring
    F = list(F)
    if not F:
        raise ValueError("need at least one generator")
    return F, F[0].ring


def initial_monomials(polys):
    return [p.LM for p in polys]


def minimal_monomials(monos, key=None):
    """Minimal generators of the monomial ideal spanned by ``monos``."""
    out = []
    for m in sorted(set(monos), key=key or sum):
        if not any(divides(a, m) for a in out):
            out.append(m)
    return out


# ---------------------------------------------------------------- algorithm

def buchberger(F, strategy="first", criteria=False):
    """Compute a (non-minimal) Gröbner basis of the ideal generated by ``F``.

    Parameters
    ----------
    F : GeneratorSet or list of Polynomial
        Nonzero generators; their position fixes the leaf lineages.
    strategy : {"first", "normal"}
        ``"first"`` processes pairs in queue order. Generator pairs ``(i, j)``
        with ``i < j`` are queued first in lexicographic order; when element
        ``k`` is added the pairs ``(k, 0), ..., (k, k-1)`` are appended.
        ``"normal"`` always takes a pair whose lcm is smallest in the order,
        breaking ties by queue order.
    criteria : bool
        Skip pairs via Buchberger's coprime and chain criteria. Off by default
        because skipped pairs change the lineage trace.

    Returns
    -------
    GroebnerBasisResult
        The generators (made monic) followed by every nonzero remainder, in
        the order they were added. If a remainder is a nonzero constant the
        result is the single element ``1``.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    gens, ring = _generators(F)
    key = ring.key
    stats = {"pairs": 0, "zero_reductions": 0, "additions": 0, "skipped": 0}

    basis = []
    for i, f in enumerate(gens):
        if not f.terms:
            raise ValueError("generators must be nonzero")
        f = f.monic()
        if f.is_constant():
            return GroebnerBasisResult([(f, i)], ring, stats=stats)
        basis.append((f, i))

    queue = deque()
    heap = []
    pending = set()
    seq = 0

    def push(i, j):
        nonlocal seq
        if strategy == "first":
            queue.append((i, j))
        else:
            L = lcm(basis[i][0].LM, basis[j][0].LM)
            heapq.heappush(heap, (key(L), seq, i, j))
        pending.add((min(i, j), max(i, j)))
        seq += 1

    def pop():
        if strategy == "first":
            return queue.popleft()
        _, _, i, j = heapq.heappop(heap)
        return i, j

    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            push(i, j)

    while pending:
        i, j = pop()
        pending.discard((min(i, j), max(i, j)))
        f, lf = basis[i]
        g, lg = basis[j]
        if criteria and _skip(i, j, basis, pending):
            stats["skipped"] += 1
            continue
        stats["pairs"] += 1
        r = normal_form(s_polynomial(f, g), [b for b, _ in basis])
        if not r.terms:
            stats["zero_reductions"] += 1
            continue
        r = r.monic()
        lin = (lf, lg)
        stats["additions"] += 1
        if r.is_constant():
            return GroebnerBasisResult([(r, lin)], ring, stats=stats)
        k = len(basis)
        basis.append((r, lin))
        for i2 in range(k):
            push(k, i2)

    return GroebnerBasisResult(basis, ring, stats=stats)


def _skip(i, j, basis, pending):
    mi, mj = basis[i][0].LM, basis[j][0].LM
    if all(a == 0 or b == 0 for a, b in zip(mi, mj)):
        return True
    L = lcm(mi, mj)
    for k in range(len(basis)):
        if k == i or k == j:
            continue
        if divides(basis[k][0].LM, L):
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                return True
    return False


def minimalize(B):
    """Drop every element whose initial monomial is divisible by another's.

    Among elements sharing an initial monomial the earliest one is kept.
    Surviving elements keep their relative order.
    """
    key = B.ring.key
    order = sorted(range(len(B.elements)), key=lambda i: (key(B.elements[i][0].LM), i))
    kept = []
    for i in order:
        m = B.elements[i][0].LM
        if not any(divides(B.elements[j][0].LM, m) for j in kept):
            kept.append(i)
    kept.sort()
    return GroebnerBasisResult([B.elements[i] for i in kept], B.ring, minimal=True,
                               reduced=False, stats=dict(B.stats))


def reduce(B):
    """Interreduce a minimal basis into the reduced Gröbner basis.

    The output is sorted by increasing initial monomial, so two runs on the
    same ideal and order give identical results whatever the strategy.
    """
    if not B.minimal:
        B = minimalize(B)
    polys = B.polynomials
    out = []
    for i, (p, lin) in enumerate(B.elements):
        others = polys[:i] + polys[i + 1:]
        q = normal_form(p, others) if others else p
        out.append((q.monic(), lin))
    key = B.ring.key
    out.sort(key=lambda t: key(t[0].LM))
    return GroebnerBasisResult(out, B.ring, minimal=True, reduced=True, stats=dict(B.stats))


def reduced_groebner_basis(F, strategy="normal", criteria=True):
    """The reduced Gröbner basis of ``<F>`` as a list of polynomials."""
    return reduce(minimalize(buchberger(F, strategy=strategy, criteria=criteria))).polynomials


def is_groebner_basis(C, F):
    """Check that ``C`` is a Gröbner basis containing the ideal of ``F``.

    Passes when every S-polynomial of a pair from ``C`` and every generator
    of ``F`` reduce to zero modulo ``C``. Membership of ``C`` in ``<F>`` is
    not checked here.
    """
    C = list(C)
    gens, _ = _generators(F)
    if not C:
        return Certificate(False, "empty", None, None)
    for i in range(len(C)):
        for j in range(i + 1, len(C)):
            r = normal_form(s_polynomial(C[i], C[j]), C)
            if r.terms:
                return Certificate(False, "s-pair", (i, j), r)
    for i, f in enumerate(gens):
        r = normal_form(f, C)
        if r.terms:
            return Certificate(False, "generator", i, r)
    return Certificate(True)


def longest_lineage(B, measure="depth"):
    """Largest lineage size over the elements of ``B``.

    ``measure="depth"`` counts nesting levels, ``"leaves"`` counts leaves.
    """
    fn = {"depth": lineage_depth, "leaves": lineage_leaves}[measure]
    return max((fn(lin) for lin in B.lineages), default=0)

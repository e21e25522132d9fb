"""Violator spaces and Clarkson's two sampling algorithms.

A violator space is a finite universe ``H`` plus a primitive test deciding
whether ``h`` violates a subset ``S``. Elements are addressed by their index
in the universe and subsets are collections of indices.
"""

import math
import random
from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "ViolatorSpace", "MaxSpace", "IntervalSpace", "BrokenSpace", "BasisResult",
    "AxiomReport", "RoundCapExceeded", "MultiplicityMap", "violates",
    "violator_set", "brute_force_basis", "basis2", "clarkson1", "check_axioms",
]

ROUND_CAP = 10_000


class RoundCapExceeded(RuntimeError):
    """A sampling loop ran past its round cap.

    With a genuine violator space and a correct combinatorial dimension this
    does not happen in practice; it usually means the dimension passed in is
    far too small or the primitive is not a violator operator.
    """


class ViolatorSpace:
    """Base class: subclasses implement :meth:`primitive`.

    Parameters
    ----------
    universe : sequence
        The elements of ``H``; only their positions matter to the algorithms.
    """

    def __init__(self, universe):
        self.universe = list(universe)
        self.queries = 0

    def __len__(self):
        return len(self.universe)

    def primitive(self, h, S):
        """Raw test ``h in vi(S)`` on indices, with no precondition or counting."""
        raise NotImplementedError

    def violates(self, h, S):
        """Counted primitive query; ``h`` must lie outside ``S``."""
        if h in S:
            raise ValueError(f"element {h} lies in the tested set")
        self.queries += 1
        return self.primitive(h, S)

    def small_basis(self, G):
        """Basis of a small subset; spaces with a direct rule override this."""
        return brute_force_basis(self, G)

    def violator_set(self, G, C):
        return violator_set(self, G, C)


class MaxSpace(ViolatorSpace):
    """Numbers; ``h`` violates ``S`` when it exceeds ``max(S)``. Dimension 1."""

    def primitive(self, h, S):
        if not S:
            return True
        return self.universe[h] > max(self.universe[s] for s in S)


class IntervalSpace(ViolatorSpace):
    """Points on a line; ``h`` violates ``S`` when it lies outside ``[min S, max S]``.

    Dimension 2.
    """

    def primitive(self, h, S):
        if not S:
            return True
        vals = [self.universe[s] for s in S]
        x = self.universe[h]
        return x < min(vals) or x > max(vals)


class BrokenSpace(ViolatorSpace):
    """``h`` violates ``S`` exactly when ``h`` is in ``S``: fails consistency."""

    def primitive(self, h, S):
        return h in S

    def violates(self, h, S):
        self.queries += 1
        return self.primitive(h, S)


@dataclass
class BasisResult:
    basis: list
    primitive_queries: int
    rounds: int
    seed: object = None

    def to_json(self):
        return {"basis_size": len(self.basis), "primitive_queries": self.primitive_queries,
                "rounds": self.rounds, "seed": self.seed}


def violates(space, h, S):
    return space.violates(h, S)


def violator_set(space, G, C):
    """``{h in G \\ C : h violates C}``, sorted by index."""
    Cset = frozenset(C)
    return [h for h in sorted(set(G) - Cset) if space.violates(h, Cset)]


def brute_force_basis(space, G):
    """Smallest subset ``B`` of ``G`` with no violators in ``G``.

    Subsets are tried by increasing size, lexicographically by index within a
    size, so the first hit is inclusion-minimal.
    """
    G = sorted(set(G))
    for size in range(len(G) + 1):
        for B in combinations(G, size):
            Bset = frozenset(B)
            if not any(space.violates(h, Bset) for h in G if h not in Bset):
                return list(B)
    return G


class MultiplicityMap(dict):
    """Element multiplicities, all starting at 1; values are exact ints."""

    def __init__(self, elements):
        super().__init__((h, 1) for h in elements)

    def total(self, elements=None):
        if elements is None:
            return sum(self.values())
        return sum(self[h] for h in elements)

    def double(self, elements):
        for h in elements:
            self[h] *= 2


def _weighted_sample(rng, elements, weights, size):
    """Draw ``size`` distinct elements, each draw proportional to remaining weight."""
    pool = list(elements)
    w = [weights[h] for h in pool]
    total = sum(w)
    out = []
    for _ in range(min(size, len(pool))):
        r = rng.randrange(total)
        acc = 0
        for i, wi in enumerate(w):
            acc += wi
            if r < acc:
                break
        out.append(pool[i])
        total -= w[i]
        pool[i] = pool[-1]
        w[i] = w[-1]
        pool.pop()
        w.pop()
    return out


def _as_rng(rng):
    if isinstance(rng, random.Random):
        return rng
    return random.Random(rng)


def _basis2(space, G, delta, rng, round_cap, stats, trace=None):
    G = sorted(set(G))
    sample_size = 6 * delta * delta
    if len(G) <= sample_size:
        return sorted(space.small_basis(G))
    m = MultiplicityMap(G)
    rounds = 0
    while True:
        rounds += 1
        stats["rounds"] += 1
        if rounds > round_cap:
            raise RoundCapExceeded(f"basis2 exceeded {round_cap} rounds (delta={delta})")
        R = _weighted_sample(rng, G, m, sample_size)
        C = space.small_basis(R)
        V = violator_set(space, G, C)
        if trace is not None:
            trace.append((m.total(), m.total(V), len(V)))
        if not V:
            return sorted(C)
        if 3 * delta * m.total(V) <= m.total():
            m.double(V)


def basis2(space, G, delta, rng=None, round_cap=ROUND_CAP, trace=None):
    """Clarkson's second algorithm: reweighted sampling of ``6 delta^2`` elements.

    Each round samples ``R`` with probability proportional to multiplicity,
    solves ``R`` with ``space.small_basis`` and collects the violators ``V``
    of the result in ``G``. If ``m(V) <= m(G) / (3 delta)`` the multiplicity
    of every element of ``V`` doubles. Stops when ``V`` is empty.
    Multiplicities start at 1 on every call.

    ``trace``, if a list, receives ``(m(G), m(V), |V|)`` for every round.
    """
    if delta < 1:
        raise ValueError("delta must be at least 1")
    rng = _as_rng(rng)
    stats = {"rounds": 0}
    start = space.queries
    C = _basis2(space, G, delta, rng, round_cap, stats, trace)
    return BasisResult(C, space.queries - start, stats["rounds"])


def clarkson1(space, G=None, delta=1, rng=None, seed=None, round_cap=ROUND_CAP):
    """Clarkson's first algorithm over ``G`` (the whole universe by default).

    Large inputs are handled by repeatedly solving ``W + R`` with
    :func:`basis2`, where ``R`` is a uniform ``floor(delta sqrt|G|)``-subset of
    ``G \\ W`` and ``W`` accumulates violator sets of size at most
    ``2 sqrt|G|``. Inputs with at most ``9 delta^2`` elements go straight to
    :func:`basis2`.

    Returns
    -------
    BasisResult
        ``rounds`` counts sampling rounds of both stages; ``seed`` echoes the
        ``seed`` argument.
    """
    if delta < 1:
        raise ValueError("delta must be at least 1")
    if rng is None:
        rng = random.Random(seed)
    G = sorted(set(range(len(space))) if G is None else set(G))
    start = space.queries
    stats = {"rounds": 0}
    n = len(G)
    if n <= 9 * delta * delta:
        C = _basis2(space, G, delta, rng, round_cap, stats)
    else:
        W = set()
        sample_size = math.floor(delta * math.sqrt(n))
        threshold = 2 * math.sqrt(n)
        rounds = 0
        while True:
            rounds += 1
            stats["rounds"] += 1
            if rounds > round_cap:
                raise RoundCapExceeded(f"clarkson1 exceeded {round_cap} rounds (delta={delta})")
            rest = [h for h in G if h not in W]
            R = rng.sample(rest, min(sample_size, len(rest)))
            C = _basis2(space, W.union(R), delta, rng, round_cap, stats)
            V = violator_set(space, G, C)
            if not V:
                break
            if len(V) <= threshold:
                W.update(V)
    return BasisResult(C, space.queries - start, stats["rounds"], seed)


@dataclass
class AxiomReport:
    """Outcome of :func:`check_axioms`; ``failure`` names the first broken axiom."""

    trials: int
    passed: bool
    failure: str = None
    witness: tuple = None

    def __bool__(self):
        return self.passed


def _vi(space, S, universe):
    return frozenset(h for h in universe if space.primitive(h, S))


def check_axioms(space, trials=1000, rng=None, max_size=None):
    """Test consistency, locality and monotonicity on random ``F <= G <= H``.

    Uses the raw primitive, so query counters are untouched. ``max_size``
    bounds the size of ``G``.
    """
    rng = _as_rng(rng)
    universe = range(len(space))
    n = len(space)
    top = n if max_size is None else min(n, max_size)
    for t in range(trials):
        g_size = rng.randint(0, top)
        G = frozenset(rng.sample(range(n), g_size))
        F = frozenset(h for h in G if rng.random() < 0.5)
        viG = _vi(space, G, universe)
        if G & viG:
            return AxiomReport(t + 1, False, "consistency", (sorted(G), sorted(G & viG)))
        viF = _vi(space, F, universe)
        if F & viF:
            return AxiomReport(t + 1, False, "consistency", (sorted(F), sorted(F & viF)))
        if not viG <= viF:
            return AxiomReport(t + 1, False, "monotonicity", (sorted(F), sorted(G)))
        if not (G & viF) and viF != viG:
            return AxiomReport(t + 1, False, "locality", (sorted(F), sorted(G)))
    return AxiomReport(trials, True)

"""Building, counting and pruning sampling universes."""

import random
import warnings
from math import comb

import numpy as np

from .buchberger import buchberger, minimalize, reduce
from .gbviolator import GroebnerViolatorSpace
from .poly import GeneratorSet, PolynomialRing, count_monomials, monomials_up_to, normal_form

__all__ = [
    "toric_universe", "toric_member", "oracle_universe", "universe_size_bound",
    "prune_universe", "random_monomial", "random_monomial_of_degree",
]


def _canonical_sort(polys, ring):
    key = ring.key
    return sorted(polys, key=lambda p: tuple(key(m) for m in p.monomials()))


def toric_member(A, u, v):
    """``x^u - x^v`` lies in the toric ideal of ``A`` iff ``A u = A v``."""
    A = np.asarray(A)
    return bool(np.array_equal(A @ np.asarray(u), A @ np.asarray(v)))


def toric_universe(A, d, ring=None, order="grevlex"):
    """All binomials ``x^u - x^v`` with ``deg u, deg v <= d`` and ``A u = A v``.

    Parameters
    ----------
    A : array_like of int, shape (rows, n)
    d : int
        Degree bound for both monomials.
    ring : PolynomialRing, optional
        Defaults to QQ[x1..xn] with ``order``.

    Returns
    -------
    GroebnerViolatorSpace
        Monic binomials, the larger monomial leading, sorted canonically.
    """
    A = np.asarray(A, dtype=np.int64)
    if A.ndim != 2:
        raise ValueError("A must be a matrix")
    n = A.shape[1]
    if d < 1:
        raise ValueError("degree bound must be at least 1")
    if ring is None:
        ring = PolynomialRing(n, order)
    elif ring.n != n:
        raise ValueError("ring and matrix disagree on the number of variables")
    if np.any(~A.any(axis=0)):
        warnings.warn("toric matrix has a zero column", stacklevel=2)
    monos = monomials_up_to(n, d)
    images = A @ np.array(monos, dtype=np.int64).T
    fibers = {}
    for j, m in enumerate(monos):
        fibers.setdefault(tuple(images[:, j]), []).append(m)
    polys = []
    for fiber in fibers.values():
        for a in range(len(fiber)):
            for b in range(a + 1, len(fiber)):
                p = ring.monomial(fiber[a]) - ring.monomial(fiber[b])
                polys.append(p.monic())
    return GroebnerViolatorSpace(_canonical_sort(polys, ring), ring)


def random_monomial(rng, n, max_degree):
    """Degree uniform on ``0..max_degree``, exponents uniform on that simplex."""
    return random_monomial_of_degree(rng, n, rng.randint(0, max_degree))


def random_monomial_of_degree(rng, n, d):
    """Exponent vector drawn uniformly among those of total degree ``d``."""
    cuts = sorted(rng.sample(range(d + n - 1), n - 1))
    parts = []
    prev = -1
    for c in cuts:
        parts.append(c - prev - 1)
        prev = c
    parts.append(d + n - 1 - prev - 1)
    return tuple(parts)


def oracle_universe(F, padding=0, rng=None, seed=None, multiplier_degree=2, exact=False):
    """Universe around the reduced Gröbner basis of ``<F>``.

    Contains the reduced Gröbner basis, the nonzero normal forms of the
    generators modulo it (none, in exact arithmetic), and padding elements
    ``m g + m' g'`` with random monomials ``m, m'`` of degree at most
    ``multiplier_degree`` and random basis elements ``g, g'``. ``padding``
    counts attempts; zero and duplicate results are skipped, unless ``exact``
    is set, in which case drawing continues until ``padding`` new elements
    were added.
    """
    if padding < 0:
        raise ValueError("padding must be nonnegative")
    if rng is None:
        rng = random.Random(seed)
    gens = F if isinstance(F, GeneratorSet) else GeneratorSet(F)
    ring = gens.ring
    gb = reduce(minimalize(buchberger(gens, strategy="normal", criteria=True))).polynomials
    polys = list(gb)
    for f in gens:
        r = normal_form(f, gb)
        if r.terms:
            polys.append(r)
    seen = {p.monic() for p in polys}
    added = 0
    attempts = 0
    limit = 50 * padding + 100
    while (added < padding) if exact else (attempts < padding):
        attempts += 1
        if exact and attempts > limit:
            raise RuntimeError(f"could not find {padding} distinct padding elements")
        g, h = rng.choice(gb), rng.choice(gb)
        m = random_monomial(rng, ring.n, multiplier_degree)
        m2 = random_monomial(rng, ring.n, multiplier_degree)
        p = g.mul_term(m) + h.mul_term(m2)
        if not p.terms:
            continue
        p = p.monic()
        if p in seen:
            continue
        seen.add(p)
        polys.append(p)
        added += 1
    return GroebnerViolatorSpace(polys, ring)


def universe_size_bound(n, d, ell=None, homogeneous=False):
    """Worst-case sizes for universes of polynomials of degree at most ``d``.

    Returns a dict with

    ``monomials``
        monomials of degree at most ``d`` (exactly ``d`` when homogeneous).
    ``pairs``
        unordered monomial pairs, the size of the all-binomials universe;
        with ``homogeneous`` only equal-degree pairs count.
    ``gamma``
        ``ell`` times the monomial count over a field with ``ell`` elements,
        ``None`` over an infinite field.
    ``subset_bound``
        the text ``"2^gamma"``; it is reported, never materialized.
    """
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    up_to = count_monomials(n, d, "up-to-degree")
    if homogeneous:
        pairs = sum(comb(count_monomials(n, e, "exact-degree"), 2) for e in range(d + 1))
        monos = count_monomials(n, d, "exact-degree")
    else:
        pairs = comb(up_to, 2)
        monos = up_to
    gamma = None if ell is None else ell * monos
    return {"monomials": monos, "pairs": pairs, "gamma": gamma,
            "subset_bound": None if gamma is None else f"2^{gamma}"}


def prune_universe(space, max_terms=None, degree_cap=None):
    """Keep elements with at most ``max_terms`` terms and degree at most ``degree_cap``.

    Warns when anything is removed: the result may no longer contain a
    Gröbner basis.
    """
    kept = [p for p in space.polynomials
            if (max_terms is None or len(p) <= max_terms)
            and (degree_cap is None or p.total_degree() <= degree_cap)]
    if len(kept) < len(space):
        warnings.warn(f"pruning removed {len(space) - len(kept)} of {len(space)} elements; "
                      "the universe may no longer contain a Groebner basis", stacklevel=2)
    return GroebnerViolatorSpace(kept, space.ring, primitive=space.primitive_kind)

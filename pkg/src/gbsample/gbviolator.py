"""The Gröbner violator space over a finite universe of polynomials.

``h`` violates ``S`` when its initial monomial is not divisible by the
initial monomial of any element of ``S``, i.e. adding ``h`` grows the
monomial ideal generated by the initial monomials of ``S``. A basis of a
subset is a set of elements whose initial monomials minimally generate that
monomial ideal; over a universe containing a Gröbner basis of ``I`` the
largest basis is a minimal Gröbner basis of ``I``.
"""

from .buchberger import reduced_groebner_basis
from .poly import divides
from .violator import ViolatorSpace, brute_force_basis, clarkson1

__all__ = [
    "GroebnerViolatorSpace", "gb_violates", "specialized_basis",
    "largest_basis_bruteforce", "spark_basis",
]


def gb_violates(h, S):
    """Polynomial-level primitive: does ``h`` grow the initial ideal of ``S``?"""
    if not h.terms:
        raise ValueError("zero polynomial has no initial term")
    m = h.LM
    return not any(divides(s.LM, m) for s in S)


class GroebnerViolatorSpace(ViolatorSpace):
    """Violator space on deduplicated monic polynomials.

    Parameters
    ----------
    polys : iterable of Polynomial
        Nonzero polynomials of one ring; duplicates after making them monic
        are dropped, keeping first occurrences.
    primitive : {"divisibility", "ideal"}
        ``"divisibility"`` compares against the initial monomials of ``S``.
        ``"ideal"`` compares against the initial ideal of the ideal spanned
        by ``S``, which costs a Gröbner basis per distinct ``S``; it is an
        experimental alternative and is not a violator operator in general.
    """

    def __init__(self, polys, ring=None, primitive="divisibility"):
        polys = list(polys)
        if ring is None:
            if not polys:
                raise ValueError("need a ring for an empty universe")
            ring = polys[0].ring
        seen = set()
        elements = []
        for p in polys:
            if p.ring != ring:
                raise ValueError("universe polynomials from different rings")
            if not p.terms:
                raise ValueError("universe elements must be nonzero")
            p = p.monic()
            if p not in seen:
                seen.add(p)
                elements.append(p)
        super().__init__(elements)
        if primitive not in ("divisibility", "ideal"):
            raise ValueError(f"unknown primitive {primitive!r}")
        self.ring = ring
        self.order = ring.order
        self.primitive_kind = primitive
        self.leads = [p.LM for p in elements]
        self.lead_index = {}
        for i, m in enumerate(self.leads):
            self.lead_index.setdefault(m, []).append(i)
        self._ideal_cache = {}

    @property
    def polynomials(self):
        return self.universe

    def __getitem__(self, i):
        return self.universe[i]

    def primitive(self, h, S):
        m = self.leads[h]
        if self.primitive_kind == "ideal":
            return not any(divides(a, m) for a in self._ideal_leads(S))
        leads = self.leads
        for s in S:
            if divides(leads[s], m):
                return False
        return True

    def _ideal_leads(self, S):
        S = frozenset(S)
        if S not in self._ideal_cache:
            if S:
                gb = reduced_groebner_basis([self.universe[s] for s in sorted(S)])
                self._ideal_cache[S] = [g.LM for g in gb]
            else:
                self._ideal_cache[S] = []
        return self._ideal_cache[S]

    def small_basis(self, G):
        if self.primitive_kind == "ideal":
            return brute_force_basis(self, G)
        return specialized_basis(self, G)

    def tie_key(self, i):
        """Preference among elements sharing an initial monomial."""
        p = self.universe[i]
        key = self.ring.key
        return (len(p.terms), tuple(key(m) for m, _ in p.terms[1:]),
                tuple(c for _, c in p.terms[1:]), i)

    def select(self, indices):
        return [self.universe[i] for i in indices]

    def initial_monomials(self, indices):
        return [self.leads[i] for i in indices]


def specialized_basis(space, G=None):
    """Basis of ``G`` from the minimal generators of its initial monomials.

    Elements are scanned by increasing initial monomial, then by
    :meth:`GroebnerViolatorSpace.tie_key` (fewest terms, then smallest
    trailing monomials, then coefficients, then index). An element is kept
    unless the initial monomial of a kept element divides its own. An element
    with initial monomial 1 therefore wins alone.
    """
    G = range(len(space)) if G is None else set(G)
    key = space.ring.key
    leads = space.leads
    kept = []
    for i in sorted(G, key=lambda i: (key(leads[i]), space.tie_key(i))):
        m = leads[i]
        if not any(divides(leads[j], m) for j in kept):
            kept.append(i)
    return sorted(kept)


def largest_basis_bruteforce(space, crosscheck_limit=12):
    """Basis of the whole universe, cross-checked by subset enumeration.

    For universes of at most ``crosscheck_limit`` elements the generic
    brute-force basis is also computed; both must have the same size and the
    same violator set, otherwise ``AssertionError`` is raised.
    """
    B = specialized_basis(space)
    if len(space) <= crosscheck_limit:
        Bf = brute_force_basis(space, range(len(space)))
        every = range(len(space))
        vi = frozenset(h for h in every if space.primitive(h, frozenset(B)))
        vf = frozenset(h for h in every if space.primitive(h, frozenset(Bf)))
        if len(Bf) != len(B) or vi != vf:
            raise AssertionError(f"specialized basis {B} disagrees with brute force {Bf}")
    return B


def spark_basis(space, k, rng=None, seed=None, round_cap=None):
    """Run Clarkson's first algorithm on the whole universe with dimension ``k``.

    ``k`` only sizes the samples: any ``k`` at least the true dimension gives
    the same initial monomials.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    kwargs = {} if round_cap is None else {"round_cap": round_cap}
    return clarkson1(space, delta=k, rng=rng, seed=seed, **kwargs)

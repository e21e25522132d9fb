"""Exact multivariate polynomials over QQ or a prime field.

Monomials are dense exponent tuples. A :class:`PolynomialRing` fixes the
variable count, the monomial order and the coefficient field; every
:class:`Polynomial` keeps its terms sorted strictly decreasing in that order.
"""

import re
from fractions import Fraction
from functools import partial
from math import comb

__all__ = [
    "QQ", "FiniteField", "parse_field", "MonomialOrder", "compare",
    "PolynomialRing", "Polynomial", "count_monomials", "monomials_up_to",
    "monomials_of_degree", "divides", "lcm", "monomial_str", "normal_form",
    "s_polynomial", "GeneratorSet",
]


# ---------------------------------------------------------------- fields

class RationalField:
    """Arbitrary-precision rationals backed by :class:`fractions.Fraction`."""

    name = "QQ"
    characteristic = 0

    def __call__(self, x):
        return Fraction(x)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return 1 / Fraction(a)

    def reduce(self, a):
        return a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        # unpickle to the module singleton
        return "QQ"


QQ = RationalField()


class FiniteField:
    """The prime field with ``p`` elements; coefficients are ints in ``[0, p)``."""

    def __init__(self, p):
        p = int(p)
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"Fp:{p}"

    def __call__(self, x):
        x = Fraction(x)
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.p)

    def reduce(self, a):
        return a % self.p

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"FiniteField({self.p})"


def parse_field(text):
    """Parse ``QQ`` or ``Fp:<p>``."""
    text = text.strip()
    if text == "QQ":
        return QQ
    if text.startswith("Fp:"):
        return FiniteField(int(text[3:]))
    raise ValueError(f"unknown field {text!r}")


# ---------------------------------------------------------------- monomials

def divides(a, b):
    """True if monomial ``a`` divides ``b``."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def monomials_of_degree(n, d):
    """All exponent vectors of length ``n`` summing to ``d``, lex-descending."""
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return out


def monomials_up_to(n, d):
    out = []
    for e in range(d + 1):
        out.extend(monomials_of_degree(n, e))
    return out


def count_monomials(n, d, mode="up-to-degree"):
    """Number of monomials in ``n`` variables.

    ``mode="exact-degree"`` counts monomials of total degree exactly ``d``,
    which is ``C(d+n-1, d)``. ``mode="up-to-degree"`` counts those of degree
    at most ``d``, ``C(d+n, n)``. Note ``C(d+n, d)`` equals the second count,
    not the first.
    """
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    if mode == "exact-degree":
        return comb(d + n - 1, d)
    if mode == "up-to-degree":
        return comb(d + n, n)
    raise ValueError(f"unknown mode {mode!r}")


def _lex_key(m):
    return m


def _grlex_key(m):
    return (sum(m), m)


def _grevlex_key(m):
    return (sum(m), tuple([-e for e in reversed(m)]))


def _perm_lex_key(perm, m):
    return tuple([m[i] for i in perm])


def _perm_grlex_key(perm, m):
    return (sum(m), tuple([m[i] for i in perm]))


def _perm_grevlex_key(perm, m):
    return (sum(m), tuple([-m[i] for i in reversed(perm)]))


class MonomialOrder:
    """A lex, grlex or grevlex order with an optional variable precedence.

    ``precedence`` lists variable indices from most to least significant;
    the default ``(0, 1, ..., n-1)`` means x1 > x2 > ... > xn.
    """

    KINDS = ("lex", "grlex", "grevlex")

    def __init__(self, kind="grevlex", precedence=None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.precedence = None if precedence is None else tuple(precedence)
        if self.precedence is not None and sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError("precedence must be a permutation of 0..n-1")
        self.key = self._make_key()

    def _make_key(self):
        perm = self.precedence
        if perm is None:
            return {"lex": _lex_key, "grlex": _grlex_key, "grevlex": _grevlex_key}[self.kind]
        fn = {"lex": _perm_lex_key, "grlex": _perm_grlex_key, "grevlex": _perm_grevlex_key}[self.kind]
        return partial(fn, perm)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and other.kind == self.kind
                and other.precedence == self.precedence)

    def __hash__(self):
        return hash((self.kind, self.precedence))

    def __repr__(self):
        if self.precedence is None:
            return f"MonomialOrder({self.kind!r})"
        return f"MonomialOrder({self.kind!r}, {self.precedence})"

    def __str__(self):
        return self.kind


def compare(a, b, order):
    """Return -1, 0 or 1 as ``a`` is smaller, equal or greater than ``b``."""
    if len(a) != len(b):
        raise ValueError("monomials of different arity")
    if isinstance(order, str):
        order = MonomialOrder(order)
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def monomial_str(m, names):
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------- rings

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?|(\*)|([+-]))")


class PolynomialRing:
    """K[x1, ..., xn] with a fixed monomial order.

    Parameters
    ----------
    n : int
        Number of variables.
    order : str or MonomialOrder
    field : QQ or FiniteField
    names : sequence of str, optional
        Variable names used for parsing and printing; ``x1..xn`` by default.
    """

    def __init__(self, n, order="grevlex", field=QQ, names=None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.order = MonomialOrder(order) if isinstance(order, str) else order
        self.field = field
        self.names = tuple(names) if names is not None else tuple(f"x{i + 1}" for i in range(n))
        if len(self.names) != n:
            raise ValueError("need one name per variable")
        self._index = {name: i for i, name in enumerate(self.names)}
        self.key = self.order.key
        self.one_monomial = (0,) * n

    def __eq__(self, other):
        return (isinstance(other, PolynomialRing) and self.n == other.n
                and self.order == other.order and self.field == other.field)

    def __hash__(self):
        return hash((self.n, self.order, self.field))

    def __repr__(self):
        return f"PolynomialRing({self.n}, {self.order.kind!r}, {self.field!r})"

    def with_order(self, order):
        return PolynomialRing(self.n, order, self.field, self.names)

    # constructors
    def zero(self):
        return Polynomial(self, ())

    def one(self):
        return self.constant(1)

    def constant(self, c):
        return self.from_dict({self.one_monomial: c})

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.n:
            raise ValueError("monomial arity does not match the ring")
        return self.from_dict({exps: coeff})

    def gens(self):
        return [self.monomial(tuple(int(i == j) for j in range(self.n))) for i in range(self.n)]

    def from_dict(self, d):
        """Build a polynomial from ``{monomial: coefficient}``, dropping zeros."""
        field = self.field
        items = []
        for m, c in d.items():
            c = field(c)
            if c != 0:
                if len(m) != self.n:
                    raise ValueError("monomial arity does not match the ring")
                items.append((tuple(m), c))
        items.sort(key=lambda t: self.key(t[0]), reverse=True)
        return Polynomial(self, tuple(items))

    def _from_clean_dict(self, d):
        key = self.key
        items = sorted(((m, c) for m, c in d.items() if c != 0),
                       key=lambda t: key(t[0]), reverse=True)
        return Polynomial(self, tuple(items))

    def parse(self, text):
        """Parse a polynomial such as ``"3/2*x1*x3^2 - x2 + 1"``."""
        pos = 0
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial")
        acc = {}
        sign = 1
        coeff = None
        mono = [0] * self.n
        have_factor = False
        expect_factor = True

        def flush():
            c = sign * (coeff if coeff is not None else 1)
            m = tuple(mono)
            acc[m] = acc.get(m, 0) + c

        while pos < len(text):
            mt = _TOKEN.match(text, pos)
            if not mt or mt.end() == pos:
                raise ValueError(f"cannot parse {text!r} at position {pos}")
            pos = mt.end()
            num, var, exp, star, op = mt.groups()
            if op is not None:
                if have_factor:
                    if expect_factor:
                        raise ValueError(f"dangling '*' in {text!r}")
                    flush()
                    sign = 1
                    coeff = None
                    mono = [0] * self.n
                    have_factor = False
                sign *= -1 if op == "-" else 1
                expect_factor = True
            elif star is not None:
                if expect_factor:
                    raise ValueError(f"unexpected '*' in {text!r}")
                expect_factor = True
            else:
                if not expect_factor:
                    raise ValueError(f"missing operator in {text!r}")
                if num is not None:
                    coeff = Fraction(num) * (coeff if coeff is not None else 1)
                else:
                    if var not in self._index:
                        raise ValueError(f"unknown variable {var!r}")
                    mono[self._index[var]] += int(exp) if exp is not None else 1
                have_factor = True
                expect_factor = False
        if not have_factor or expect_factor:
            raise ValueError(f"incomplete polynomial {text!r}")
        flush()
        return self.from_dict(acc)

    __call__ = parse


class Polynomial:
    """An immutable polynomial; ``terms`` is a tuple of ``(monomial, coeff)``."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # basic queries
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no initial term")
        m, c = self.terms[0]
        return c, m

    @property
    def LM(self):
        if not self.terms:
            raise ValueError("zero polynomial has no initial term")
        return self.terms[0][0]

    @property
    def LC(self):
        if not self.terms:
            raise ValueError("zero polynomial has no initial term")
        return self.terms[0][1]

    def monomials(self):
        return [m for m, _ in self.terms]

    def coefficients(self):
        return [c for _, c in self.terms]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m, _ in self.terms)

    def is_constant(self):
        return len(self.terms) == 1 and not any(self.terms[0][0])

    def is_homogeneous(self):
        return len({sum(m) for m, _ in self.terms}) <= 1

    def to_dict(self):
        return dict(self.terms)

    # arithmetic
    def _check(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        elif other.ring != self.ring:
            raise ValueError("polynomials from different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        d = dict(self.terms)
        red = self.ring.field.reduce
        for m, c in other.terms:
            d[m] = red(d.get(m, 0) + c)
        return self.ring._from_clean_dict(d)

    __radd__ = __add__

    def __neg__(self):
        red = self.ring.field.reduce
        return Polynomial(self.ring, tuple((m, red(-c)) for m, c in self.terms))

    def __sub__(self, other):
        other = self._check(other)
        d = dict(self.terms)
        red = self.ring.field.reduce
        for m, c in other.terms:
            d[m] = red(d.get(m, 0) - c)
        return self.ring._from_clean_dict(d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        d = {}
        red = self.ring.field.reduce
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                d[m] = red(d.get(m, 0) + c1 * c2)
        return self.ring._from_clean_dict(d)

    __rmul__ = __mul__

    def scale(self, c):
        c = self.ring.field(c)
        if c == 0:
            return self.ring.zero()
        red = self.ring.field.reduce
        return Polynomial(self.ring, tuple((m, red(a * c)) for m, a in self.terms))

    def mul_term(self, mono, coeff=1):
        """Multiply by the term ``coeff * x^mono``; the order is preserved."""
        if coeff == 0:
            return self.ring.zero()
        red = self.ring.field.reduce
        return Polynomial(self.ring, tuple(
            (tuple(a + b for a, b in zip(m, mono)), red(c * coeff)) for m, c in self.terms))

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def monic(self):
        """Scale so the leading coefficient is 1; the zero polynomial is returned as is."""
        if not self.terms or self.terms[0][1] == 1:
            return self
        return self.scale(self.ring.field.inv(self.terms[0][1]))

    normalize = monic

    # comparison, hashing, printing
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __repr__(self):
        return f"Polynomial({self!s})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        out = []
        for i, (m, c) in enumerate(self.terms):
            neg = c < 0 if self.ring.field.characteristic == 0 else False
            a = -c if neg else c
            ms = monomial_str(m, names)
            if ms == "1":
                body = str(a)
            elif a == 1:
                body = ms
            else:
                body = f"{a}*{ms}"
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)


# ---------------------------------------------------------------- division

def normal_form(f, G, with_quotients=False):
    """Divide ``f`` by the list ``G``.

    At every step the largest monomial of the running dividend that is
    divisible by some leading monomial is reduced by the first such divisor
    in list order; monomials that no leading monomial divides go to the
    remainder. Returns the remainder, or ``(quotients, remainder)`` when
    ``with_quotients`` is set.
    """
    ring = f.ring
    key = ring.key
    field = ring.field
    red = field.reduce
    leads = []
    for g in G:
        if not g.terms:
            raise ValueError("division by the zero polynomial")
        if g.ring != ring:
            raise ValueError("polynomials from different rings")
        m, c = g.terms[0]
        leads.append((m, 1 if c == 1 else field.inv(c), g.terms))
    quot = [dict() for _ in G] if with_quotients else None

    p = dict(f.terms)
    r = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for i, (lm, lcinv, gterms) in enumerate(leads):
            for a, b in zip(lm, m):
                if a > b:
                    break
            else:
                q = tuple(b - a for a, b in zip(lm, m))
                qc = red(c * lcinv)
                for gm, gc in gterms:
                    t = tuple(a + b for a, b in zip(gm, q))
                    v = red(p.get(t, 0) - qc * gc)
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                if quot is not None:
                    quot[i][q] = red(quot[i].get(q, 0) + qc)
                break
        else:
            r[m] = c
            del p[m]
    rem = ring._from_clean_dict(r)
    if with_quotients:
        return [ring._from_clean_dict(q) for q in quot], rem
    return rem


def s_polynomial(f, g):
    """``(L/init f) f / lc(f) - (L/init g) g / lc(g)`` with ``L`` the lcm of leading monomials."""
    if not f.terms or not g.terms:
        raise ValueError("S-polynomial of the zero polynomial")
    field = f.ring.field
    mf, mg = f.terms[0][0], g.terms[0][0]
    L = lcm(mf, mg)
    a = f.mul_term(tuple(x - y for x, y in zip(L, mf)), field.inv(f.terms[0][1]))
    b = g.mul_term(tuple(x - y for x, y in zip(L, mg)), field.inv(g.terms[0][1]))
    return a - b


class GeneratorSet:
    """An ordered list of nonzero generators ``f_0, ..., f_{s-1}`` of an ideal."""

    def __init__(self, generators, ring=None):
        generators = list(generators)
        if ring is None:
            if not generators:
                raise ValueError("need a ring for an empty generator set")
            ring = generators[0].ring
        for g in generators:
            if g.ring != ring:
                raise ValueError("generators from different rings")
            if not g.terms:
                raise ValueError("generators must be nonzero")
        self.ring = ring
        self.generators = tuple(generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def __eq__(self, other):
        return (isinstance(other, GeneratorSet) and self.ring == other.ring
                and self.generators == other.generators)

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return "GeneratorSet([" + ", ".join(str(g) for g in self.generators) + "])"

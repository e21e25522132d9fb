"""End-to-end driver: predict (k, m), build a universe, sample, check, escalate."""

import json
import math
import random
import time
from dataclasses import dataclass, field
from pathlib import Path

from .buchberger import Certificate, is_groebner_basis, reduced_groebner_basis
from .gbviolator import GroebnerViolatorSpace, spark_basis
from .io import read_ideal, read_matrix, read_polynomials
from .poly import GeneratorSet, divides, monomial_str, normal_form
from .predictor import RegressionModel, constant_predict, oracle_predict, predict
from .universe import oracle_universe, toric_universe
from .violator import RoundCapExceeded, violator_set

__all__ = [
    "PipelineConfig", "RunReport", "Verdict", "EscalationError", "run_spark", "verify",
    "parse_predictor", "parse_universe",
]


class EscalationError(RuntimeError):
    """Every escalation failed; carries the last candidate and its verdict."""

    def __init__(self, message, basis=None, verdict=None, report=None):
        super().__init__(message)
        self.basis = basis
        self.verdict = verdict
        self.report = report


@dataclass
class PipelineConfig:
    """One run. ``predictor`` is ``oracle``, ``regression:<model.json>`` or
    ``constant:<k>[,<m>]``; ``universe`` is ``toric:<A-file>``,
    ``oracle:<padding>`` or ``file:<path>``."""

    input: object = None
    order: str = None
    field: object = None
    predictor: str = "oracle"
    universe: str = "oracle:50"
    seed: int = 0
    safety_factor: float = 1.5
    max_escalations: int = 8
    degree_slack: int = 0
    stats_path: str = None
    matrix: object = None


@dataclass
class Verdict:
    """The three checks on a candidate basis, plus optional ideal membership.

    A check that was not run is ``None``. ``witness`` describes the first
    failure.
    """

    violator_free: bool = None
    groebner: Certificate = None
    minimal: bool = None
    membership: bool = None
    witness: object = None

    @property
    def ok(self):
        checks = [self.violator_free, bool(self.groebner) if self.groebner is not None else None,
                  self.minimal, self.membership]
        return all(c is not False for c in checks) and self.groebner is not None and self.minimal is not None

    def to_json(self):
        return {"violator_free": self.violator_free,
                "groebner": None if self.groebner is None else bool(self.groebner),
                "minimal": self.minimal, "membership": self.membership,
                "witness": None if self.witness is None else str(self.witness)}


def verify(C, F, space=None, basis_indices=None, ideal_basis=None):
    """Check a candidate basis ``C`` of ``<F>``.

    (a) no element of ``space`` violates ``C`` (needs ``basis_indices``),
    (b) ``C`` passes the S-pair criterion and reduces every generator to 0,
    (c) the initial monomials of ``C`` are pairwise non-divisible.
    If ``ideal_basis`` (a Gröbner basis of ``<F>``) is given, every element
    of ``C`` must also reduce to 0 modulo it.
    """
    C = list(C)
    v = Verdict()
    if space is not None and basis_indices is not None:
        V = violator_set(space, range(len(space)), basis_indices)
        v.violator_free = not V
        if V and v.witness is None:
            v.witness = ("violator", str(space[V[0]]))
    v.groebner = is_groebner_basis(C, F)
    if not v.groebner and v.witness is None:
        g = v.groebner
        v.witness = (g.kind, g.index, str(g.remainder) if g.remainder is not None else None)
    v.minimal = True
    for i, a in enumerate(C):
        for j, b in enumerate(C):
            if i != j and divides(a.LM, b.LM):
                v.minimal = False
                if v.witness is None:
                    v.witness = ("divisible", str(a), str(b))
                break
        if not v.minimal:
            break
    if ideal_basis is not None:
        bad = [c for c in C if normal_form(c, ideal_basis).terms]
        v.membership = not bad
        if bad and v.witness is None:
            v.witness = ("not-in-ideal", str(bad[0]))
    return v


@dataclass
class RunReport:
    basis: list
    initial_monomials: list
    k_used: int
    m_used: int
    universe_size: int
    primitive_queries: int
    rounds: int
    escalations: int
    verified: bool
    seed: object
    wall_ms: float
    delta_actual: int = None
    predictor: str = None
    safety_factor: float = None
    multiplicities: str = "reset-per-basis2-call"
    checks: dict = field(default_factory=dict)
    polynomials: list = field(default_factory=list, repr=False)

    def to_json(self):
        return {"basis": self.basis, "initial_monomials": self.initial_monomials,
                "k_used": self.k_used, "m_used": self.m_used,
                "universe_size": self.universe_size,
                "primitive_queries": self.primitive_queries, "rounds": self.rounds,
                "escalations": self.escalations, "verified": self.verified,
                "seed": self.seed, "wall_ms": self.wall_ms,
                "delta_actual": self.delta_actual, "predictor": self.predictor,
                "safety_factor": self.safety_factor,
                "multiplicities": self.multiplicities, "checks": self.checks}


def parse_predictor(text):
    kind, _, arg = text.partition(":")
    if kind == "oracle" and not arg:
        return ("oracle", None)
    if kind == "regression" and arg:
        return ("regression", arg)
    if kind == "constant" and arg:
        parts = arg.split(",")
        if len(parts) > 2:
            raise ValueError(f"bad constant predictor {text!r}")
        k = int(parts[0])
        m = int(parts[1]) if len(parts) == 2 else None
        return ("constant", (k, m))
    raise ValueError(f"bad predictor {text!r}")


def parse_universe(text):
    kind, _, arg = text.partition(":")
    if kind == "oracle":
        return ("oracle", int(arg) if arg else 0)
    if kind in ("toric", "file") and arg:
        return (kind, arg)
    raise ValueError(f"bad universe {text!r}")


def _load_ideal(config):
    if isinstance(config.input, GeneratorSet):
        return config.input
    if isinstance(config.input, (list, tuple)):
        return GeneratorSet(config.input)
    if config.input is None:
        raise ValueError("no input ideal")
    return read_ideal(config.input, config.order, config.field)


def _predict(config, F):
    kind, arg = parse_predictor(config.predictor)
    if kind == "oracle":
        return oracle_predict(F)
    if kind == "regression":
        return predict(RegressionModel.load(arg), F)
    k, m = arg
    return constant_predict(k, m, F, config.degree_slack)


def _build_universe(config, F, m, rng):
    kind, arg = parse_universe(config.universe)
    ring = F.ring
    if kind == "oracle":
        return oracle_universe(F, arg, rng=rng)
    if kind == "toric":
        A = config.matrix if config.matrix is not None else read_matrix(arg)
        return toric_universe(A, m, ring=ring)
    _, polys = read_polynomials(arg, ring.order, ring.field)
    polys = [ring.parse(str(p)) if p.ring != ring else p for p in polys]
    return GroebnerViolatorSpace(polys, ring)


def run_spark(config):
    """Compute a verified minimal Gröbner basis by sampling.

    Each attempt samples with ``k_used = ceil(k * safety_factor)``. A
    candidate is accepted when it passes :func:`verify` and has at most
    ``k_used`` elements. A candidate that is too large doubles ``k``; any
    other failure raises ``m`` by one and rebuilds a toric universe. Other
    universes cannot grow, so such a failure ends the run.

    Raises
    ------
    EscalationError
        The escalation budget ran out, or the universe cannot be enlarged.
        No unverified basis is ever returned.
    """
    t0 = time.perf_counter()
    F = _load_ideal(config)
    rng = random.Random(config.seed)
    pred = _predict(config, F)
    k, m = pred.k, pred.m
    ukind, _ = parse_universe(config.universe)
    delta = pred.k if pred.source == "oracle" else None
    ideal_basis = None
    if ukind == "file":
        ideal_basis = reduced_groebner_basis(F)
        delta = len(ideal_basis)
    elif ukind == "oracle" and delta is None:
        delta = len(reduced_groebner_basis(F))

    space = _build_universe(config, F, m, rng)
    queries = rounds = escalations = 0
    while True:
        k_used = max(1, math.ceil(k * config.safety_factor - 1e-9))
        before = space.queries
        capped = False
        try:
            res = spark_basis(space, k_used, rng=rng)
            rounds += res.rounds
        except RoundCapExceeded:
            capped = True
        if not capped:
            C = space.select(res.basis)
            verdict = verify(C, F, space, res.basis, ideal_basis)
        queries += space.queries - before
        if not capped and verdict.ok and len(C) <= k_used:
            report = RunReport(
                basis=[str(p) for p in C],
                initial_monomials=[monomial_str(p.LM, F.ring.names) for p in C],
                k_used=k_used, m_used=m, universe_size=len(space),
                primitive_queries=queries, rounds=rounds, escalations=escalations,
                verified=True, seed=config.seed,
                wall_ms=round(1000 * (time.perf_counter() - t0), 3),
                delta_actual=delta, predictor=pred.source,
                safety_factor=config.safety_factor, checks=verdict.to_json(), polynomials=C)
            if config.stats_path:
                Path(config.stats_path).write_text(json.dumps(report.to_json(), indent=2))
            return report

        escalations += 1
        last = None if capped else C
        last_verdict = None if capped else verdict
        if escalations > config.max_escalations:
            raise EscalationError(
                f"no verified basis after {config.max_escalations} escalations "
                f"(k={k}, m={m}, |H|={len(space)})", last, last_verdict)
        if capped or len(C) > k_used:
            k *= 2
        elif ukind == "toric":
            m += 1
            space = _build_universe(config, F, m, rng)
        else:
            raise EscalationError(
                f"candidate from the {ukind} universe failed the check and the universe "
                f"cannot be enlarged: {verdict.witness}", last, last_verdict)

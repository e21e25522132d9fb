"""Predicting the size ``k`` and degree ``m`` of a minimal Gröbner basis.

Three predictors share the :class:`Prediction` output: the exact oracle
(Buchberger), a constant, and ordinary least squares over cheap generator
statistics.
"""

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .buchberger import buchberger, minimalize
from .poly import GeneratorSet, PolynomialRing, QQ
from .universe import random_monomial_of_degree

__all__ = [
    "FEATURE_NAMES", "FEATURE_VERSION", "Prediction", "LabeledIdeal", "RegressionModel",
    "extract_features", "oracle_predict", "constant_predict", "generate_random_binomial_ideals",
    "fit", "predict", "evaluate", "r_squared", "save_dataset", "load_dataset",
]

FEATURE_VERSION = 1
FEATURE_NAMES = (
    "n", "s",
    "degree_min", "degree_max", "degree_mean",
    "support_min", "support_max", "support_mean",
    "terms_mean",
    "low_degree_min", "low_degree_mean", "constant_terms",
    "coeff_height_max", "coeff_height_mean",
    "homogeneous",
)


@dataclass(frozen=True)
class Prediction:
    k: int
    m: int
    source: str

    def __post_init__(self):
        if self.k < 1 or self.m < 1:
            raise ValueError("predictions must be at least 1")


@dataclass
class LabeledIdeal:
    generators: GeneratorSet
    k: int
    m: int

    def to_json(self):
        ring = self.generators.ring
        return {"generators": [str(g) for g in self.generators], "n": ring.n,
                "order": ring.order.kind, "k": self.k, "m": self.m}

    @classmethod
    def from_json(cls, record, field=QQ):
        ring = PolynomialRing(record["n"], record["order"], field)
        gens = GeneratorSet([ring.parse(g) for g in record["generators"]], ring)
        return cls(gens, record["k"], record["m"])


def _height(c):
    c = Fraction(c)
    return math.log2(max(abs(c.numerator), c.denominator, 1))


def extract_features(F):
    """Generator statistics in :data:`FEATURE_NAMES` order, as a float array."""
    gens = list(F)
    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].ring
    degrees = [g.total_degree() for g in gens]
    supports = [sum(1 for i in range(ring.n) if any(m[i] for m, _ in g.terms)) for g in gens]
    heights = [_height(c) for g in gens for _, c in g.terms]
    low = [min(sum(m) for m, _ in g.terms) for g in gens]
    return np.array([
        ring.n, len(gens),
        min(degrees), max(degrees), np.mean(degrees),
        min(supports), max(supports), np.mean(supports),
        np.mean([len(g) for g in gens]),
        min(low), np.mean(low), sum(1 for d in low if d == 0),
        max(heights), np.mean(heights),
        float(all(g.is_homogeneous() for g in gens)),
    ], dtype=float)


def oracle_predict(F, strategy="normal", criteria=True):
    """Exact ``k`` (minimal basis size) and ``m`` (its largest total degree)."""
    B = minimalize(buchberger(F, strategy=strategy, criteria=criteria))
    k = len(B)
    m = max(p.total_degree() for p in B.polynomials)
    return Prediction(k, max(m, 1), "oracle")


def constant_predict(k, m=None, F=None, slack=0):
    """Fixed ``k``; ``m`` defaults to the largest generator degree plus ``slack``."""
    if m is None:
        if F is None:
            raise ValueError("need m or generators to default it")
        m = max(g.total_degree() for g in F) + slack
    return Prediction(int(k), max(int(m), 1), "constant")


def _random_binomial(rng, ring, d):
    while True:
        u = random_monomial_of_degree(rng, ring.n, d)
        v = random_monomial_of_degree(rng, ring.n, rng.randint(0, d))
        if u != v:
            return ring.monomial(u) - ring.monomial(v)


def _label(gens):
    pred = oracle_predict(gens)
    return LabeledIdeal(gens, pred.k, pred.m)


def generate_random_binomial_ideals(n, s, d, count, seed=0, order="grevlex", field=QQ,
                                    processes=1):
    """Random ideals of ``s`` binomials ``x^u - x^v`` labelled by the oracle.

    In each binomial one monomial has degree exactly ``d`` and the other a
    degree uniform on ``0..d``; exponents are uniform on the degree simplex.
    The sampled ideals depend only on ``seed``; ``processes > 1`` labels them
    in a process pool.
    """
    if min(n, s, d) < 1 or count < 0:
        raise ValueError("need n, s, d >= 1 and count >= 0")
    rng = random.Random(seed)
    ring = PolynomialRing(n, order, field)
    ideals = [GeneratorSet([_random_binomial(rng, ring, d) for _ in range(s)], ring)
              for _ in range(count)]
    if processes > 1 and count > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(processes) as pool:
            return list(pool.map(_label, ideals, chunksize=32))
    return [_label(g) for g in ideals]


def save_dataset(path, dataset):
    with open(path, "w") as fh:
        for rec in dataset:
            fh.write(json.dumps(rec.to_json()) + "\n")


def load_dataset(path, field=QQ):
    with open(path) as fh:
        return [LabeledIdeal.from_json(json.loads(line), field) for line in fh if line.strip()]


# ---------------------------------------------------------------- regression

@dataclass
class RegressionModel:
    """Linear models for ``k`` and ``m``; weights end with the intercept."""

    weights: dict
    feature_version: int = FEATURE_VERSION
    seed: object = None
    n_train: int = 0

    def raw(self, features):
        x = np.append(np.asarray(features, dtype=float), 1.0)
        return {t: float(x @ np.asarray(w)) for t, w in self.weights.items()}

    def save(self, path):
        Path(path).write_text(json.dumps({
            "weights": {t: list(map(float, w)) for t, w in self.weights.items()},
            "feature_version": self.feature_version, "seed": self.seed,
            "n_train": self.n_train, "features": list(FEATURE_NAMES)}))

    @classmethod
    def load(cls, path):
        d = json.loads(Path(path).read_text())
        if d["feature_version"] != FEATURE_VERSION:
            raise ValueError(f"model uses feature version {d['feature_version']}, "
                             f"this build computes version {FEATURE_VERSION}")
        return cls({t: np.array(w) for t, w in d["weights"].items()},
                   d["feature_version"], d.get("seed"), d.get("n_train", 0))


def _design(dataset):
    X = np.array([extract_features(rec.generators) for rec in dataset])
    return np.hstack([X, np.ones((len(X), 1))])


def _solve(X, y, ridge=1e-8):
    A = X.T @ X
    b = X.T @ y
    if np.linalg.matrix_rank(A) == A.shape[0]:
        try:
            return np.linalg.solve(A, b)
        except np.linalg.LinAlgError:
            pass
    lam = ridge * max(np.trace(A) / A.shape[0], 1.0)
    return np.linalg.solve(A + lam * np.eye(A.shape[0]), b)


def fit(dataset, seed=None):
    """Least squares via the normal equations, ridge-regularized if singular."""
    dataset = list(dataset)
    if len(dataset) <= len(FEATURE_NAMES):
        raise ValueError("need more examples than features")
    X = _design(dataset)
    weights = {}
    for target in ("k", "m"):
        y = np.array([getattr(rec, target) for rec in dataset], dtype=float)
        weights[target] = _solve(X, y)
    return RegressionModel(weights, FEATURE_VERSION, seed, len(dataset))


def predict(model, F):
    """Round the linear predictions up, never below 1."""
    raw = model.raw(extract_features(F))
    k = max(1, math.ceil(raw["k"] - 1e-9))
    m = max(1, math.ceil(raw["m"] - 1e-9))
    return Prediction(k, m, "regression")


def r_squared(y_true, y_pred):
    """``1 - SS_res / SS_tot``; undefined (``ValueError``) for constant labels."""
    y_true = np.asarray(y_true, dtype=float)
    y_pred = np.asarray(y_pred, dtype=float)
    ss_tot = float(np.sum((y_true - y_true.mean()) ** 2))
    if ss_tot == 0:
        raise ValueError("r^2 is undefined when all labels are equal")
    return 1.0 - float(np.sum((y_true - y_pred) ** 2)) / ss_tot


def evaluate(model, heldout, target="k"):
    """r^2 of the unrounded predictions on ``heldout``."""
    heldout = list(heldout)
    y = [getattr(rec, target) for rec in heldout]
    yhat = [model.raw(extract_features(rec.generators))[target] for rec in heldout]
    return r_squared(y, yhat)

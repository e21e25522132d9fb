"""Primitive-query scaling sweeps over universes of growing size."""

import random
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .gbviolator import spark_basis
from .poly import PolynomialRing
from .universe import oracle_universe

__all__ = ["default_family", "scaling_sweep", "loglog_slope"]


def default_family():
    """The ideal (x^2 - y, x^3 - z) under grevlex; its minimal bases have 3 elements."""
    R = PolynomialRing(3, "grevlex", names=("x", "y", "z"))
    return [R("x^2 - y"), R("x^3 - z")], 3


def loglog_slope(sizes, values):
    """Least-squares slope of log(values) against log(sizes)."""
    x = np.log(np.asarray(sizes, dtype=float))
    y = np.log(np.asarray(values, dtype=float))
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def _one_run(job):
    generators, padding, delta, multiplier_degree, seed = job
    rng = random.Random(seed)
    space = oracle_universe(generators, padding, rng=rng, exact=True,
                            multiplier_degree=multiplier_degree)
    res = spark_basis(space, delta, rng=rng)
    return res.primitive_queries, res.rounds


def scaling_sweep(sizes=(100, 200, 400, 800, 1600, 3200), seeds=20, generators=None, delta=None,
                  base_seed=0, multiplier_degree=6, processes=1):
    """Mean primitive-query count of :func:`spark_basis` per universe size.

    Each (size, seed) pair gets its own padded oracle universe with exactly
    ``size`` elements, built and sampled from one derived seed.

    Returns
    -------
    dict
        ``sizes``, ``mean_queries``, ``mean_rounds`` and the log-log ``slope``.
    """
    if generators is None:
        generators, fam_delta = default_family()
        delta = delta or fam_delta
    if delta is None:
        raise ValueError("delta is required with custom generators")
    padding0 = len(oracle_universe(generators, 0))
    jobs = [(generators, size - padding0, delta, multiplier_degree,
             base_seed * 1_000_003 + size * 1_000 + s)
            for size in sizes for s in range(seeds)]
    if processes > 1:
        with ProcessPoolExecutor(processes) as pool:
            runs = list(pool.map(_one_run, jobs, chunksize=4))
    else:
        runs = [_one_run(job) for job in jobs]
    means, rounds = [], []
    for i in range(len(sizes)):
        chunk = runs[i * seeds:(i + 1) * seeds]
        means.append(float(np.mean([q for q, _ in chunk])))
        rounds.append(float(np.mean([r for _, r in chunk])))
    return {"sizes": list(sizes), "mean_queries": means, "mean_rounds": rounds,
            "slope": loglog_slope(sizes, means)}

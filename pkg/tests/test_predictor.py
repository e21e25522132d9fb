import numpy as np
import pytest

from gbsample.poly import PolynomialRing
from gbsample.predictor import (FEATURE_NAMES, LabeledIdeal, Prediction, RegressionModel,
                                constant_predict, evaluate, extract_features, fit,
                                generate_random_binomial_ideals, load_dataset, oracle_predict,
                                predict, r_squared, save_dataset)


def test_oracle_prediction_of_worked_example(cubic_ideal):
    assert oracle_predict(cubic_ideal) == Prediction(3, 2, "oracle")


def test_constant_prediction(cubic_ideal):
    assert constant_predict(4, 2) == Prediction(4, 2, "constant")
    assert constant_predict(4, F=cubic_ideal).m == 3
    assert constant_predict(4, F=cubic_ideal, slack=2).m == 5
    with pytest.raises(ValueError):
        constant_predict(4)
    with pytest.raises(ValueError):
        Prediction(0, 1, "constant")


def test_features_of_worked_example(cubic_ideal):
    f = dict(zip(FEATURE_NAMES, extract_features(cubic_ideal)))
    assert f["n"] == 3 and f["s"] == 2
    assert (f["degree_min"], f["degree_max"], f["degree_mean"]) == (2, 3, 2.5)
    assert (f["support_min"], f["support_max"]) == (2, 2)
    assert f["terms_mean"] == 2
    assert (f["low_degree_min"], f["constant_terms"]) == (1, 0)
    assert f["coeff_height_max"] == 0
    assert f["homogeneous"] == 0


def test_generation_is_seeded_and_shaped():
    a = generate_random_binomial_ideals(3, 4, 5, 12, seed=3)
    b = generate_random_binomial_ideals(3, 4, 5, 12, seed=3, processes=2)
    assert [x.to_json() for x in a] == [x.to_json() for x in b]
    for rec in a:
        assert len(rec.generators) == 4
        for g in rec.generators:
            assert len(g) == 2
            assert max(sum(m) for m in g.monomials()) == 5
        assert oracle_predict(rec.generators) == Prediction(rec.k, rec.m, "oracle")
    with pytest.raises(ValueError):
        generate_random_binomial_ideals(0, 4, 5, 1)


def test_dataset_round_trip(tmp_path):
    data = generate_random_binomial_ideals(3, 3, 4, 5, seed=1)
    path = tmp_path / "d.jsonl"
    save_dataset(path, data)
    back = load_dataset(path)
    assert [x.to_json() for x in back] == [x.to_json() for x in data]
    assert isinstance(back[0], LabeledIdeal)


def test_r_squared():
    assert r_squared([1, 2, 3], [1, 2, 3]) == 1.0
    assert r_squared([1, 2, 3], [2, 2, 2]) == 0.0
    assert r_squared([1, 2, 3], [3, 2, 1]) == -3.0
    with pytest.raises(ValueError):
        r_squared([2, 2], [1, 3])


def test_fit_recovers_a_linear_rule(tmp_path):
    data = generate_random_binomial_ideals(3, 3, 4, 60, seed=8)
    # replace labels by an exact linear function of two features
    for rec in data:
        f = dict(zip(FEATURE_NAMES, extract_features(rec.generators)))
        rec.k = 2 * f["low_degree_mean"] + 1
        rec.m = f["terms_mean"]
    model = fit(data, seed=8)
    assert evaluate(model, data, "k") == pytest.approx(1.0)
    path = tmp_path / "model.json"
    model.save(path)
    loaded = RegressionModel.load(path)
    for t in ("k", "m"):
        assert np.allclose(loaded.weights[t], model.weights[t])
    pred = predict(loaded, data[0].generators)
    assert pred.k == data[0].k and pred.source == "regression"


def test_model_version_is_checked(tmp_path):
    data = generate_random_binomial_ideals(3, 3, 4, 30, seed=2)
    model = fit(data)
    model.feature_version = 99
    model.save(tmp_path / "m.json")
    with pytest.raises(ValueError, match="feature version"):
        RegressionModel.load(tmp_path / "m.json")
    with pytest.raises(ValueError):
        fit(data[:5])


def test_predict_never_below_one():
    R = PolynomialRing(2)
    model = RegressionModel({"k": np.append(np.zeros(len(FEATURE_NAMES)), -5.0),
                             "m": np.append(np.zeros(len(FEATURE_NAMES)), -5.0)})
    assert predict(model, [R("x1 - x2")]) == Prediction(1, 1, "regression")

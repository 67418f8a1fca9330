import numpy as np
import pytest

from pipeline_evolution.dataset import Dataset
from pipeline_evolution.ops import OperatorKind, apply_transform, fit_transform
from pipeline_evolution.ops.exceptions import DegenerateOutputError, OperatorError, ParameterError, ShapeError
from pipeline_evolution.utils import Deadline


@pytest.fixture(scope="module")
def wide() -> Dataset:
    rng = np.random.default_rng(11)
    rows = rng.standard_normal((60, 6)) * [1, 2, 3, 4, 5, 6] + 10
    rows[:, 5] = 7.0
    labels = np.repeat([0, 1], 30)
    rows[labels == 1, 0] += 4
    return Dataset.from_arrays(rows, labels)


def test_standard_scale(wide):
    fitted, out = fit_transform("StandardScale", {}, wide)
    assert np.allclose(out.rows[:, :5].mean(axis=0), 0, atol=1e-9)
    assert np.allclose(out.rows[:, :5].std(axis=0), 1, atol=1e-9)
    assert (out.rows[:, 5] == 0).all()
    assert out.feature_names == wide.feature_names


def test_robust_scale(wide):
    _, out = fit_transform("RobustScale", {}, wide)
    q1, median, q3 = np.percentile(out.rows[:, :5], [25, 50, 75], axis=0)
    assert np.allclose(median, 0, atol=1e-9)
    assert np.allclose(q3 - q1, 1, atol=1e-9)
    assert (out.rows[:, 5] == 0).all()


@pytest.mark.parametrize("kind", ["StandardScale", "RobustScale"])
def test_scaling_does_not_depend_on_row_order(wide, kind):
    order = np.random.default_rng(4).permutation(wide.n_rows)
    fitted, out = fit_transform(kind, {}, wide)
    shuffled_fitted, shuffled_out = fit_transform(kind, {}, wide.take(order))

    assert np.allclose(shuffled_out.rows, out.rows[order], rtol=0, atol=1e-12)
    test = wide.take(range(10))
    assert np.allclose(apply_transform(shuffled_fitted, test).rows, apply_transform(fitted, test).rows, atol=1e-12)


def test_statistics_come_from_training_data(wide):
    fitted, _ = fit_transform("StandardScale", {}, wide.take(range(30)))
    out = apply_transform(fitted, wide.take(range(30, 60)))
    assert not np.allclose(out.rows[:, 0].mean(), 0, atol=0.5)


def test_polynomial_features():
    ds = Dataset.from_arrays([[1.0, 2.0], [3.0, 4.0]], [0, 1])
    _, out = fit_transform("PolynomialFeatures", {}, ds)
    assert out.feature_names == ("bias", "x0", "x1", "x0^2", "x0*x1", "x1^2")
    assert out.rows.tolist() == [[1.0, 1.0, 2.0, 1.0, 2.0, 4.0], [1.0, 3.0, 4.0, 9.0, 12.0, 16.0]]


@pytest.mark.parametrize("n_components, expected", [(2, 2), (5, 5), (64, 5)])
def test_pca(wide, n_components, expected):
    fitted, out = fit_transform("RandomizedPCA", {"n_components": n_components}, wide)
    components = fitted.state["components"]
    assert out.n_features == expected
    assert out.feature_names[0] == "pc0"
    assert np.allclose(components @ components.T, np.eye(expected), atol=1e-9)
    covariance = np.cov(out.rows, rowvar=False)
    assert np.allclose(covariance - np.diag(np.diag(covariance)), 0, atol=1e-8)


def test_randomized_pca_on_wide_data():
    rng = np.random.default_rng(0)
    latent = rng.standard_normal((50, 2))
    rows = latent @ rng.standard_normal((2, 100)) + 0.01 * rng.standard_normal((50, 100))
    ds = Dataset.from_arrays(rows, np.repeat([0, 1], 25))
    fitted, out = fit_transform("RandomizedPCA", {"n_components": 2, "iterated_power": 3}, ds, seed=1)
    centered = rows - rows.mean(axis=0)
    explained = (out.rows**2).sum() / (centered**2).sum()
    assert explained > 0.99
    assert fitted.n_features_out == 2


@pytest.mark.parametrize(
    "rows, expected",
    [
        (np.random.default_rng(3).standard_normal((4, 10)), 3),
        (np.random.default_rng(3).standard_normal((10, 4)), 3),
        ([[0.0], [1.0], [3.0], [4.0]], 1),
    ],
)
def test_pca_components_stop_below_the_smaller_dimension(rows, expected):
    _, out = fit_transform("RandomizedPCA", {"n_components": 64}, Dataset.from_arrays(rows, np.arange(len(rows)) % 2))
    assert out.n_features == expected


def test_pca_with_all_components_reconstructs_training_rows():
    rows = np.random.default_rng(7).standard_normal((5, 5))
    assert np.linalg.matrix_rank(rows) == 5
    fitted, out = fit_transform("RandomizedPCA", {"n_components": 5}, Dataset.from_arrays(rows, [0, 0, 1, 1, 1]))

    reconstructed = out.rows @ fitted.state["components"] + fitted.state["mean"]
    assert np.abs(reconstructed - rows).max() < 1e-6


def test_variance_threshold_keeps_variance_equal_to_threshold():
    ds = Dataset.from_arrays([[0.0, 0.0], [1.0, 0.5], [0.0, 0.0], [1.0, 0.5]], [0, 0, 1, 1])
    _, out = fit_transform("VarianceThreshold", {"threshold": 0.25}, ds)
    assert out.feature_names == ("x0",)


@pytest.mark.parametrize(
    "kind, params, expected",
    [
        ("VarianceThreshold", {"threshold": 0.0}, ("x0", "x1", "x2", "x3", "x4")),
        ("VarianceThreshold", {"threshold": 0.25}, ("x0", "x1", "x2", "x3", "x4")),
        ("SelectKBest", {"k": 1}, ("x0",)),
        ("SelectKBest", {"k": 100}, ("x0", "x1", "x2", "x3", "x4", "x5")),
        ("SelectPercentile", {"percentile": 5}, ("x0",)),
    ],
)
def test_selectors(wide, kind, params, expected):
    _, out = fit_transform(kind, params, wide)
    assert out.feature_names == expected
    assert np.array_equal(out.rows, wide.rows[:, [wide.feature_names.index(n) for n in expected]])


def test_select_percentile_rounds_up(wide):
    _, out = fit_transform("SelectPercentile", {"percentile": 50}, wide)
    assert out.n_features == 3


def test_guess_and_labels_pass_through(wide):
    ds = wide.with_guess(wide.labels)
    _, out = fit_transform("SelectKBest", {"k": 2}, ds)
    assert out.guess is not None and np.array_equal(out.guess, wide.labels)
    assert np.array_equal(out.labels, wide.labels)


def test_all_features_removed():
    ds = Dataset.from_arrays(np.ones((4, 2)), [0, 0, 1, 1])
    with pytest.raises(DegenerateOutputError):
        fit_transform("VarianceThreshold", {}, ds)


def test_non_finite_output():
    ds = Dataset.from_arrays([[1e200], [2e200], [3e200]], [0, 1, 1])
    with pytest.raises(DegenerateOutputError, match="non-finite"):
        fit_transform("PolynomialFeatures", {}, ds)


def test_shape_mismatch(wide):
    fitted, _ = fit_transform("StandardScale", {}, wide)
    with pytest.raises(ShapeError, match="6 features, but got 2"):
        apply_transform(fitted, Dataset.from_arrays(np.zeros((2, 2)), [0, 1]))


def test_model_is_not_a_transform(wide):
    with pytest.raises(OperatorError, match="train_model"):
        fit_transform(OperatorKind.KNN, {}, wide)


def test_bad_parameters(wide):
    with pytest.raises(ParameterError):
        fit_transform("SelectKBest", {"k": 0}, wide)


def test_too_few_rows():
    with pytest.raises(OperatorError, match="at least 2 rows"):
        fit_transform("StandardScale", {}, Dataset.from_arrays([[1.0]], [0], class_count=2))


def test_expired_deadline(wide):
    deadline = Deadline(1)
    while not deadline.expired:
        pass
    with pytest.raises(Exception, match="budget"):
        fit_transform("RFE", {"k": 1}, wide, deadline=deadline)


def test_rfe_keeps_informative_feature():
    rng = np.random.default_rng(4)
    labels = np.repeat([0, 1], 40)
    rows = rng.standard_normal((80, 12))
    rows[:, 7] += 3 * labels
    ds = Dataset.from_arrays(rows, labels)
    fitted, out = fit_transform("RFE", {"k": 1}, ds)
    assert out.feature_names == ("x7",)
    assert fitted.state["keep"].tolist() == [7]

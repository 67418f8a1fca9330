import pytest

from pipeline_evolution.ops import Category, OperatorKind


def test_count():
    assert len(OperatorKind) == 14
    assert len(OperatorKind.non_models()) == 8
    assert len(OperatorKind.of_category("model")) == 6


@pytest.mark.parametrize(
    "arg, expected",
    [
        (OperatorKind.KNN, OperatorKind.KNN),
        ("KNN", OperatorKind.KNN),
        ("knn", OperatorKind.KNN),
        ("standard_scale", OperatorKind.StandardScale),
        ("Select-K-Best", OperatorKind.SelectKBest),
        ("randomizedpca", OperatorKind.RandomizedPCA),
    ],
)
def test_parse(arg, expected):
    assert OperatorKind.parse(arg) is expected


@pytest.mark.parametrize("arg", ["", "SVM", "K-Means"])
def test_parse_bad(arg):
    with pytest.raises(ValueError, match="Correct input"):
        OperatorKind.parse(arg)


@pytest.mark.parametrize(
    "kind, category",
    [
        (OperatorKind.RobustScale, Category.PREPROCESSOR),
        (OperatorKind.PolynomialFeatures, Category.PREPROCESSOR),
        (OperatorKind.RandomizedPCA, Category.DECOMPOSITION),
        (OperatorKind.RFE, Category.SELECTOR),
        (OperatorKind.VarianceThreshold, Category.SELECTOR),
        (OperatorKind.GradientBoosting, Category.MODEL),
    ],
)
def test_category(kind, category):
    assert kind.category is category
    assert kind.is_model == (category is Category.MODEL)

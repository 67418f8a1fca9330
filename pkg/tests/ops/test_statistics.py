import numpy as np

from pipeline_evolution.ops import anova_f_scores
from pipeline_evolution.ops._statistics import top_k_indices


def test_anova_against_manual():
    rng = np.random.default_rng(3)
    rows = rng.standard_normal((30, 2))
    labels = np.repeat([0, 1, 2], 10)
    rows[:, 0] += labels

    grand = rows[:, 0].mean()
    groups = [rows[labels == c, 0] for c in range(3)]
    ssb = sum(len(g) * (g.mean() - grand) ** 2 for g in groups)
    ssw = sum(((g - g.mean()) ** 2).sum() for g in groups)
    expected = (ssb / 2) / (ssw / 27)

    assert np.isclose(anova_f_scores(rows, labels)[0], expected)


def test_anova_degenerate():
    rows = np.array([[0.0, 1.0, 5.0], [0.0, 1.0, 5.0], [1.0, 1.0, 6.0], [1.0, 1.0, 4.0]])
    scores = anova_f_scores(rows, np.array([0, 0, 1, 1]))
    assert scores[0] == np.inf
    assert scores[1] == 0.0
    assert np.isfinite(scores[2])


def test_anova_single_class():
    assert anova_f_scores(np.ones((3, 2)), np.zeros(3, dtype=int)).tolist() == [0.0, 0.0]


def test_top_k_ties_go_to_lower_index():
    assert top_k_indices(np.array([1.0, 3.0, 3.0, 3.0, 0.0]), 2).tolist() == [1, 2]
    assert top_k_indices(np.array([np.inf, 1.0, np.inf]), 1).tolist() == [0]

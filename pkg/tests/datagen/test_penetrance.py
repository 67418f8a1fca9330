import itertools

import numpy as np
import pytest

from pipeline_evolution.datagen import (
    PenetranceTable,
    generate_pure_epistatic_table,
    genotype_frequencies,
    heritability_of,
    project_pure,
)
from pipeline_evolution.datagen.exceptions import GenerationFailedError, UndefinedHeritabilityError
from pipeline_evolution.testing import make_xor_table


def _direct_heritability(t: PenetranceTable) -> float:
    p = genotype_frequencies(t.maf)
    k = sum(p[i] * p[j] * t.cells[i, j] for i, j in itertools.product(range(3), repeat=2))
    variance = sum(p[i] * p[j] * (t.cells[i, j] - k) ** 2 for i, j in itertools.product(range(3), repeat=2))
    return variance / (k * (1 - k))


def _direct_marginals(t: PenetranceTable) -> tuple[list[float], list[float], float]:
    p = genotype_frequencies(t.maf)
    rows = [sum(p[j] * t.cells[i, j] for j in range(3)) for i in range(3)]
    columns = [sum(p[i] * t.cells[i, j] for i in range(3)) for j in range(3)]
    return rows, columns, sum(p[i] * rows[i] for i in range(3))


@pytest.mark.parametrize("target", [0.1, 0.2, 0.4])
def test_generated_tables(target):
    rng = np.random.default_rng(int(target * 100))
    for _ in range(100):
        table = generate_pure_epistatic_table(target, 0.2, rng=rng)

        assert abs(_direct_heritability(table) - target) <= 0.01
        assert heritability_of(table) == pytest.approx(_direct_heritability(table), abs=1e-12)

        rows, columns, k = _direct_marginals(table)
        assert max(abs(r - k) for r in rows) <= 1e-6
        assert max(abs(c - k) for c in columns) <= 1e-6
        assert ((table.cells >= 0) & (table.cells <= 1)).all()


@pytest.mark.parametrize("maf", [0.3, 0.4, 0.5])
def test_other_frequencies(maf):
    table = generate_pure_epistatic_table(0.1, maf, rng=int(100 * maf))
    assert table.is_pure()
    assert table.maf == maf


def test_deterministic():
    a = generate_pure_epistatic_table(0.2, 0.3, rng=7)
    b = generate_pure_epistatic_table(0.2, 0.3, rng=7)
    assert np.array_equal(a.cells, b.cells)


def test_xor():
    table = make_xor_table()
    assert heritability_of(table) == pytest.approx(1.0)
    assert table.prevalence == pytest.approx(0.5)
    assert table.is_pure()


def test_constant_table():
    assert heritability_of(PenetranceTable(0.2, np.full((3, 3), 0.3))) == pytest.approx(0.0)


@pytest.mark.parametrize("value", [0.0, 1.0])
def test_undefined(value):
    with pytest.raises(UndefinedHeritabilityError):
        heritability_of(PenetranceTable(0.2, np.full((3, 3), value)))


def test_marginal_effect_is_not_pure():
    table = PenetranceTable(0.2, [[0.1, 0.1, 0.1], [0.5, 0.5, 0.5], [0.9, 0.9, 0.9]])
    assert not table.is_pure()
    assert table.marginal_deviation == pytest.approx(0.9 - table.prevalence)


def test_projection():
    rng = np.random.default_rng(0)
    p = genotype_frequencies(0.3)
    projected = project_pure(rng.standard_normal((3, 3)), 0.3)
    assert np.allclose(projected @ p, 0)
    assert np.allclose(p @ projected, 0)
    assert np.allclose(project_pure(projected, 0.3), projected)


def test_infeasible():
    with pytest.raises(GenerationFailedError, match="Best residual") as e:
        generate_pure_epistatic_table(0.999, 0.05, rng=0, max_attempts=100)
    assert e.value.best_residual > 0


@pytest.mark.parametrize("target, maf", [(0.0, 0.2), (1.0, 0.2), (0.2, 0.0), (0.2, 0.6)])
def test_bad_arguments(target, maf):
    with pytest.raises(ValueError):
        generate_pure_epistatic_table(target, maf)


@pytest.mark.parametrize(
    "maf, cells",
    [
        (0.2, np.zeros((2, 3))),
        (0.2, np.full((3, 3), 1.5)),
        (0.7, np.zeros((3, 3))),
    ],
)
def test_bad_table(maf, cells):
    with pytest.raises(ValueError):
        PenetranceTable(maf, cells)


def test_table_is_read_only():
    table = make_xor_table()
    with pytest.raises(ValueError):
        table.cells[0, 0] = 0.5


def test_dict_round_trip():
    table = generate_pure_epistatic_table(0.2, 0.2, rng=1)
    copy = PenetranceTable.from_dict(table.to_dict())
    assert copy.maf == table.maf
    assert np.array_equal(copy.cells, table.cells)

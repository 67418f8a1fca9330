"""Types used throughout the suite.

Rules of thumb
--------------
* Feature matrices are ``float64`` arrays of shape ``(n, m)``; label vectors are ``int64`` arrays of shape ``(n,)``.
* Arrays held by immutable types (:class:`.Dataset`, fitted operators) are read-only views.
* Every source of randomness is a :class:`numpy.random.Generator`, created from an integer seed.
"""

import typing as _t

import numpy as _np
import numpy.typing as _npt

Matrix: _t.TypeAlias = _npt.NDArray[_np.float64]
"""A real-valued ``(n, m)`` feature matrix."""
Vector: _t.TypeAlias = _npt.NDArray[_np.float64]
"""A real-valued ``(n,)`` vector."""
LabelVector: _t.TypeAlias = _npt.NDArray[_np.int64]
"""Class identifiers in ``0..C-1``."""
IndexVector: _t.TypeAlias = _npt.NDArray[_np.intp]
"""Row or column positions."""

Seed: _t.TypeAlias = int
"""Integer seed, used to create :class:`numpy.random.Generator` instances."""
Rng: _t.TypeAlias = _np.random.Generator
"""Seeded random generator."""

ParamValue: _t.TypeAlias = int | float | str | None
"""Type of a single operator hyperparameter value. ``None`` is used for `"uncapped"`-type choices."""
Params: _t.TypeAlias = _t.Mapping[str, ParamValue]
"""A parameter vector, keyed by dimension name."""

import numpy as np

from .. import types as _tt
from ..utils._deadline import NO_DEADLINE, Deadline

DENSE_MAX_FEATURES = 64
"""Widths up to this value use a dense eigendecomposition instead of the randomized range finder."""
OVERSAMPLES = 10


def _normalize_signs(components: _tt.Matrix) -> _tt.Matrix:
    pivots = np.argmax(np.abs(components), axis=1)
    signs = np.sign(components[np.arange(len(components)), pivots])
    return components * np.where(signs == 0, 1.0, signs)[:, None]


def principal_components(
    centered: _tt.Matrix,
    n_components: int,
    *,
    iterated_power: int,
    rng: _tt.Rng,
    deadline: Deadline = NO_DEADLINE,
) -> _tt.Matrix:
    """Top principal axes of a centered matrix.

    Wide inputs use a randomized range finder: a Gaussian sketch is orthonormalized, refined by `iterated_power`
    power iterations and the components are taken from the SVD of the small projected matrix.

    Args:
        centered: Column-centered ``(n, m)`` matrix.
        n_components: Number of components ``k <= min(n, m)``.
        iterated_power: Number of power iterations (randomized path only).
        rng: Source of the Gaussian sketch.
        deadline: Checked between power iterations.

    Returns:
        An orthonormal ``(k, m)`` component matrix. Each component has its largest-magnitude entry positive.
    """
    n, m = centered.shape
    if m <= DENSE_MAX_FEATURES:
        _, eigenvectors = np.linalg.eigh(centered.T @ centered)
        components = eigenvectors[:, ::-1][:, :n_components].T
        return _normalize_signs(components)

    sketch_size = min(n_components + OVERSAMPLES, m, n)
    q, _ = np.linalg.qr(centered @ rng.standard_normal((m, sketch_size)))
    for _ in range(iterated_power):
        deadline.check("randomized PCA")
        q, _ = np.linalg.qr(centered.T @ q)
        q, _ = np.linalg.qr(centered @ q)

    _, _, vt = np.linalg.svd(q.T @ centered, full_matrices=False)
    return _normalize_signs(vt[:n_components])

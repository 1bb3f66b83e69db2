"""Dense array validation, spectral-norm estimation, and seeded sampling.

Everything downstream works on plain float64 numpy arrays; the helpers here
validate shapes and finiteness at construction boundaries so the solver loops
can skip defensive checks.
"""

import numpy as np

__all__ = [
    "PowerIterationError",
    "as_matrix",
    "as_vector",
    "make_rng",
    "spectral_norm_gram",
    "gauss_vector",
    "sparse_gauss_vector",
]


class PowerIterationError(RuntimeError):
    """Raised when power iteration exhausts its budget.

    The eigenvalue estimate at abort is kept in ``last_estimate``.
    """

    def __init__(self, message, last_estimate):
        super().__init__(message)
        self.last_estimate = last_estimate


def as_vector(entries, length=None):
    """Return ``entries`` as a finite float64 1-D array.

    Raises ValueError on wrong dimensionality, a length mismatch, or any
    NaN/Inf entry.
    """
    v = np.ascontiguousarray(entries, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-D array, got shape {v.shape}")
    if length is not None and v.shape[0] != length:
        raise ValueError(f"expected length {length}, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite entries")
    return v


def as_matrix(entries, rows=None, cols=None):
    """Return ``entries`` as a finite float64 2-D (row-major) array."""
    a = np.ascontiguousarray(entries, dtype=np.float64)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D array, got shape {a.shape}")
    if rows is not None and a.shape[0] != rows:
        raise ValueError(f"expected {rows} rows, got {a.shape[0]}")
    if cols is not None and a.shape[1] != cols:
        raise ValueError(f"expected {cols} columns, got {a.shape[1]}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def make_rng(seed):
    """Seeded 64-bit generator (PCG64); one seed, one stream.

    Streams are reproducible for a fixed seed within one build; no
    cross-library bit compatibility is promised.
    """
    return np.random.Generator(np.random.PCG64(seed))


def spectral_norm_gram(B, tol=1e-10, max_iter=1000):
    """Largest eigenvalue of ``B.T @ B`` by power iteration on v -> B.T (B v).

    Starts from the normalized all-ones vector (deterministic; falls back to a
    standard basis vector in the rare case the start lies exactly in the
    kernel) and stops when the Rayleigh quotient changes by at most ``tol``
    relative between sweeps.

    Parameters
    ----------
    B : array, m x n, nonzero
    tol : float > 0
        Relative change threshold on the eigenvalue estimate.
    max_iter : int >= 1

    Returns
    -------
    float
        Estimate of ``||B.T B||_2`` (the squared largest singular value).

    Raises
    ------
    ValueError
        If ``B`` is the zero matrix ("zero operator") or arguments are bad.
    PowerIterationError
        If the budget is exhausted; carries the last estimate.
    """
    B = as_matrix(B)
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    if not B.any():
        raise ValueError("zero operator")

    n = B.shape[1]
    v = np.full(n, 1.0 / np.sqrt(n))
    w = B.T @ (B @ v)
    if not w.any():
        # all-ones start sits in ker(B^T B); any nonzero column escapes it
        j = int(np.flatnonzero(B.any(axis=0))[0])
        v = np.zeros(n)
        v[j] = 1.0
        w = B.T @ (B @ v)
    estimate = float(v @ w)
    for _ in range(max_iter):
        v = w / np.linalg.norm(w)
        w = B.T @ (B @ v)
        new = float(v @ w)
        if abs(new - estimate) <= tol * new:
            return new
        estimate = new
    raise PowerIterationError(
        f"power iteration did not reach tol={tol:g} in {max_iter} sweeps",
        last_estimate=estimate,
    )


def gauss_vector(rng, length):
    """Vector of ``length`` i.i.d. standard-normal entries drawn from ``rng``."""
    if length < 1:
        raise ValueError("length must be at least 1")
    return rng.standard_normal(length)


def sparse_gauss_vector(rng, length, density):
    """Bernoulli-thinned normal vector.

    Each entry is independently nonzero with probability ``density``; nonzero
    values are standard normal. The stream is consumed deterministically:
    ``length`` uniforms for the support mask, then ``length`` normals.
    """
    if not 0.0 < density <= 1.0:
        raise ValueError("density must lie in (0, 1]")
    if length < 1:
        raise ValueError("length must be at least 1")
    mask = rng.random(length) < density
    values = rng.standard_normal(length)
    return np.where(mask, values, 0.0)

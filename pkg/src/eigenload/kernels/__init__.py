"""Hot numeric kernels with a compiled core and a pure-Python fallback.

``import eigenload.kernels`` picks the Cython extension when it was
built and silently falls back to the Python twin otherwise; HAVE_NATIVE
says which one is active. benchmarks/bench_kernels.py compares the two.
"""

import numpy as np

from ..errors import NoConvergence
from . import _python

try:
    from . import _native
    HAVE_NATIVE = True
except ImportError:
    _native = None
    HAVE_NATIVE = False

BACKEND_NAME = "native" if HAVE_NATIVE else "python"

JACOBI_MAX_SWEEPS = 100
JACOBI_TOL = 1e-12


def get_backend(name=None):
    """Resolve a backend module by name (None = best available)."""
    if name is None:
        return _native if HAVE_NATIVE else _python
    if name == "native":
        if not HAVE_NATIVE:
            raise RuntimeError("compiled kernels are not available")
        return _native
    if name == "python":
        return _python
    raise ValueError(f"unknown kernel backend {name!r}")


def symmetric_eigh(matrix, max_sweeps=JACOBI_MAX_SWEEPS, tol=JACOBI_TOL, backend=None):
    """Full eigendecomposition of a symmetric matrix by cyclic Jacobi.

    Returns (eigenvalues, eigenvectors, sweeps) with eigenvalues sorted
    descending (stable on ties) and eigenvectors as rows, each flipped
    so its largest-magnitude entry is positive. The off-diagonal
    Frobenius tolerance is relative to the input Frobenius norm.

    Raises NoConvergence if max_sweeps cyclic sweeps do not reach tol.
    """
    a = np.array(matrix, dtype=np.float64, order="C", copy=True)
    n = a.shape[0]
    vecs = np.eye(n, dtype=np.float64, order="C")
    impl = backend if backend is not None else get_backend()
    sweeps = impl.jacobi_sweeps(a, vecs, max_sweeps, tol)
    if sweeps < 0:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
    lam = np.diagonal(a).copy()
    order = np.argsort(-lam, kind="stable")
    lam = lam[order]
    rows = np.ascontiguousarray(vecs.T[order])
    for row in rows:
        peak = np.argmax(np.abs(row))
        if row[peak] < 0.0:
            np.negative(row, out=row)
    return lam, rows, sweeps


def run_layout(coords, heads, tails, probs, n_points, a, b, total_epochs,
               negative_samples, seed, epoch_start, epoch_end, backend=None):
    """Advance the SGD layout in place over [epoch_start, epoch_end)."""
    impl = backend if backend is not None else get_backend()
    impl.layout_epochs(coords, heads, tails, probs, n_points, float(a), float(b),
                       total_epochs, epoch_start, epoch_end, negative_samples, seed)

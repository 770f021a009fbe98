# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled kernels: cyclic Jacobi eigensolver and the SGD layout loop.

Bit-for-bit twin of kernels/_python.py; keep the two in sync.
"""

from libc.math cimport pow, sqrt
from libc.stdint cimport int64_t, uint64_t

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15


cdef inline uint64_t _mix64(uint64_t z) noexcept nogil:
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
    return z ^ (z >> 31)


cdef inline uint64_t _stream_key(uint64_t seed, uint64_t e, uint64_t idx) noexcept nogil:
    cdef uint64_t h = _mix64(seed)
    h = _mix64(h + GOLDEN + e)
    h = _mix64(h + GOLDEN + idx)
    return h


cdef inline double _clip4(double v) noexcept nogil:
    if v > 4.0:
        return 4.0
    elif v < -4.0:
        return -4.0
    return v


def jacobi_sweeps(double[:, ::1] A, double[:, ::1] V, int max_sweeps, double tol):
    """See kernels._python.jacobi_sweeps."""
    cdef Py_ssize_t n = A.shape[0]
    cdef Py_ssize_t i, j, p, q, k
    cdef int sweep
    cdef double norm2 = 0.0, off2, thresh, v
    cdef double apq, app, aqq, tau, t, c, s, akp, akq, vkp, vkq
    cdef int result = -1

    with nogil:
        for i in range(n):
            for j in range(n):
                v = A[i, j]
                norm2 += v * v
        if norm2 == 0.0:
            result = 0
        else:
            thresh = (tol * tol) * norm2
            for sweep in range(1, max_sweeps + 1):
                off2 = 0.0
                for i in range(n - 1):
                    for j in range(i + 1, n):
                        v = A[i, j]
                        off2 += v * v
                if 2.0 * off2 <= thresh:
                    result = sweep - 1
                    break
                for p in range(n - 1):
                    for q in range(p + 1, n):
                        apq = A[p, q]
                        if apq == 0.0:
                            continue
                        app = A[p, p]
                        aqq = A[q, q]
                        tau = (aqq - app) / (2.0 * apq)
                        if tau >= 0.0:
                            t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                        else:
                            t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                        c = 1.0 / sqrt(1.0 + t * t)
                        s = t * c

                        for k in range(n):
                            if k == p or k == q:
                                continue
                            akp = A[k, p]
                            akq = A[k, q]
                            A[k, p] = c * akp - s * akq
                            A[p, k] = A[k, p]
                            A[k, q] = s * akp + c * akq
                            A[q, k] = A[k, q]
                        A[p, p] = app - t * apq
                        A[q, q] = aqq + t * apq
                        A[p, q] = 0.0
                        A[q, p] = 0.0

                        for k in range(n):
                            vkp = V[k, p]
                            vkq = V[k, q]
                            V[k, p] = c * vkp - s * vkq
                            V[k, q] = s * vkp + c * vkq
            if result == -1:
                off2 = 0.0
                for i in range(n - 1):
                    for j in range(i + 1, n):
                        v = A[i, j]
                        off2 += v * v
                if 2.0 * off2 <= thresh:
                    result = max_sweeps
    return result


def layout_epochs(double[:, ::1] coords, int64_t[::1] heads, int64_t[::1] tails,
                  double[::1] probs, int64_t n_points, double a, double b,
                  int64_t total_epochs, int64_t epoch_start, int64_t epoch_end,
                  int64_t negative_samples, uint64_t seed):
    """See kernels._python.layout_epochs."""
    cdef int64_t n_edges = heads.shape[0]
    cdef int64_t e, idx, i, j, r, sidx
    cdef uint64_t state
    cdef double alpha, u, xi, yi, xj, yj, dx, dy, d2, coef, gx, gy
    cdef double inv53 = 1.0 / 9007199254740992.0

    with nogil:
        for e in range(epoch_start, epoch_end):
            alpha = 1.0 - (<double>e) / (<double>total_epochs)
            for idx in range(n_edges):
                state = _stream_key(seed, <uint64_t>e, <uint64_t>idx)
                state = state + GOLDEN
                u = <double>(_mix64(state) >> 11) * inv53
                if u >= probs[idx]:
                    continue
                i = heads[idx]
                j = tails[idx]
                xi = coords[i, 0]
                yi = coords[i, 1]
                xj = coords[j, 0]
                yj = coords[j, 1]
                dx = xi - xj
                dy = yi - yj
                d2 = dx * dx + dy * dy
                if d2 > 0.0:
                    coef = (-2.0 * a * b * pow(d2, b - 1.0)) / (a * pow(d2, b) + 1.0)
                    gx = _clip4(coef * dx)
                    gy = _clip4(coef * dy)
                    xi += alpha * gx
                    yi += alpha * gy
                    coords[j, 0] = xj - alpha * gx
                    coords[j, 1] = yj - alpha * gy
                for sidx in range(negative_samples):
                    state = state + GOLDEN
                    r = <int64_t>(_mix64(state) % <uint64_t>n_points)
                    if r == i:
                        continue
                    dx = xi - coords[r, 0]
                    dy = yi - coords[r, 1]
                    d2 = dx * dx + dy * dy
                    if d2 > 0.0:
                        coef = 2.0 * b / ((0.001 + d2) * (a * pow(d2, b) + 1.0))
                        gx = _clip4(coef * dx)
                        gy = _clip4(coef * dy)
                    else:
                        gx = 4.0
                        gy = 4.0
                    xi += alpha * gx
                    yi += alpha * gy
                coords[i, 0] = xi
                coords[i, 1] = yi

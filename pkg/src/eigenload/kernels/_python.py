"""Pure-Python twins of the compiled kernels.

Slow but dependency-free. Every arithmetic step mirrors
``kernels/_native.pyx`` operation for operation (same op order, same
libm calls), so both backends produce bit-identical results; the
equivalence is pinned by tests/test_kernels.py.
"""

import math

from ..rng import GOLDEN, MASK64, mix64, stream_key


def jacobi_sweeps(A, V, max_sweeps, tol):
    """Cyclic Jacobi diagonalization of symmetric A, in place.

    V (preinitialized to identity) accumulates the rotations; on exit
    column j of V is the eigenvector for the diagonal entry A[j, j].
    Convergence: off-diagonal Frobenius norm <= tol * ||A_input||_F.
    Returns the number of sweeps used, or -1 if max_sweeps was hit.
    """
    n = A.shape[0]
    norm2 = 0.0
    for i in range(n):
        for j in range(n):
            v = float(A[i, j])
            norm2 += v * v
    if norm2 == 0.0:
        return 0
    thresh = (tol * tol) * norm2

    for sweep in range(1, max_sweeps + 1):
        off2 = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                v = float(A[i, j])
                off2 += v * v
        if 2.0 * off2 <= thresh:
            return sweep - 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(A[p, q])
                if apq == 0.0:
                    continue
                app = float(A[p, p])
                aqq = float(A[q, q])
                tau = (aqq - app) / (2.0 * apq)
                # tau may overflow to +-inf for tiny pivots; t then
                # underflows to 0 and the rotation is a clean no-op.
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c

                colp = A[:, p].copy()
                colq = A[:, q].copy()
                newp = c * colp - s * colq
                newq = s * colp + c * colq
                A[:, p] = newp
                A[p, :] = newp
                A[:, q] = newq
                A[q, :] = newq
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0

                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq

    off2 = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            v = float(A[i, j])
            off2 += v * v
    if 2.0 * off2 <= thresh:
        return max_sweeps
    return -1


def layout_epochs(coords, heads, tails, probs, n_points, a, b,
                  total_epochs, epoch_start, epoch_end,
                  negative_samples, seed):
    """Run SGD layout epochs [epoch_start, epoch_end) in place.

    Per epoch each directed edge fires with probability probs[idx]
    (weight / max weight), drawn from a splitmix64 stream keyed by
    (seed, epoch, edge index); a firing edge applies one attractive
    move to both endpoints plus `negative_samples` repulsive moves to
    the head. Gradient components are clipped to +-4 and scaled by a
    learning rate decaying linearly from 1 to 0 over total_epochs.
    """
    pos = coords.ravel().tolist()
    hs = heads.tolist()
    ts = tails.tolist()
    ps = probs.tolist()
    n_edges = len(hs)
    inv53 = 1.0 / 9007199254740992.0

    for e in range(epoch_start, epoch_end):
        alpha = 1.0 - e / total_epochs
        for idx in range(n_edges):
            state = stream_key(seed, e, idx)
            state = (state + GOLDEN) & MASK64
            u = (mix64(state) >> 11) * inv53
            if u >= ps[idx]:
                continue
            i = hs[idx]
            j = ts[idx]
            xi = pos[2 * i]
            yi = pos[2 * i + 1]
            xj = pos[2 * j]
            yj = pos[2 * j + 1]
            dx = xi - xj
            dy = yi - yj
            d2 = dx * dx + dy * dy
            if d2 > 0.0:
                coef = (-2.0 * a * b * d2 ** (b - 1.0)) / (a * d2 ** b + 1.0)
                gx = coef * dx
                if gx > 4.0:
                    gx = 4.0
                elif gx < -4.0:
                    gx = -4.0
                gy = coef * dy
                if gy > 4.0:
                    gy = 4.0
                elif gy < -4.0:
                    gy = -4.0
                xi += alpha * gx
                yi += alpha * gy
                pos[2 * j] = xj - alpha * gx
                pos[2 * j + 1] = yj - alpha * gy
            for _ in range(negative_samples):
                state = (state + GOLDEN) & MASK64
                r = mix64(state) % n_points
                if r == i:
                    continue
                dx = xi - pos[2 * r]
                dy = yi - pos[2 * r + 1]
                d2 = dx * dx + dy * dy
                if d2 > 0.0:
                    coef = 2.0 * b / ((0.001 + d2) * (a * d2 ** b + 1.0))
                    gx = coef * dx
                    if gx > 4.0:
                        gx = 4.0
                    elif gx < -4.0:
                        gx = -4.0
                    gy = coef * dy
                    if gy > 4.0:
                        gy = 4.0
                    elif gy < -4.0:
                        gy = -4.0
                else:
                    # coincident points: push a full clipped step
                    gx = 4.0
                    gy = 4.0
                xi += alpha * gx
                yi += alpha * gy
            pos[2 * i] = xi
            pos[2 * i + 1] = yi

    for i in range(n_points):
        coords[i, 0] = pos[2 * i]
        coords[i, 1] = pos[2 * i + 1]

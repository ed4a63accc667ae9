"""Quaternion / rigid-transform helpers.

Conventions used everywhere in this package:
  - quaternions are scalar-first ``[w, x, y, z]`` unit 4-vectors,
  - a pose is world<-camera: ``X_world = R(q) @ X_cam + t``,
  - all positions are meters, float64.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidParameterError


def quat_normalize(q: np.ndarray) -> np.ndarray:
    q = np.asarray(q, dtype=np.float64)
    n = np.linalg.norm(q, axis=-1, keepdims=True)
    if np.any(n == 0.0) or not np.all(np.isfinite(q)):
        raise InvalidParameterError("cannot normalize zero or non-finite quaternion")
    return q / n


def quat_to_rot(q: np.ndarray) -> np.ndarray:
    """Rotation matrices for scalar-first quaternions.

    Accepts shape (4,) or (N, 4); returns (3, 3) or (N, 3, 3). Input is
    normalized internally so slightly drifted quaternions stay valid.
    """
    q = np.asarray(q, dtype=np.float64)
    single = q.ndim == 1
    q = np.atleast_2d(q)
    q = q / np.linalg.norm(q, axis=1, keepdims=True)
    w, x, y, z = q[:, 0], q[:, 1], q[:, 2], q[:, 3]
    R = np.empty((q.shape[0], 3, 3), dtype=np.float64)
    R[:, 0, 0] = 1.0 - 2.0 * (y * y + z * z)
    R[:, 0, 1] = 2.0 * (x * y - z * w)
    R[:, 0, 2] = 2.0 * (x * z + y * w)
    R[:, 1, 0] = 2.0 * (x * y + z * w)
    R[:, 1, 1] = 1.0 - 2.0 * (x * x + z * z)
    R[:, 1, 2] = 2.0 * (y * z - x * w)
    R[:, 2, 0] = 2.0 * (x * z - y * w)
    R[:, 2, 1] = 2.0 * (y * z + x * w)
    R[:, 2, 2] = 1.0 - 2.0 * (x * x + y * y)
    return R[0] if single else R


def quat_rot_jacobian(q_unit: np.ndarray) -> np.ndarray:
    """d vec(R) / d q for unit quaternions, before tangent projection.

    Accepts (N, 4); returns (N, 9, 4) with rows ordered R00,R01,...,R22.
    """
    q = np.atleast_2d(np.asarray(q_unit, dtype=np.float64))
    w, x, y, z = q[:, 0], q[:, 1], q[:, 2], q[:, 3]
    zero = np.zeros_like(w)
    J = np.empty((q.shape[0], 9, 4), dtype=np.float64)
    # R00 = 1-2(y^2+z^2)
    J[:, 0] = np.stack([zero, zero, -4 * y, -4 * z], axis=1)
    # R01 = 2(xy - zw)
    J[:, 1] = np.stack([-2 * z, 2 * y, 2 * x, -2 * w], axis=1)
    # R02 = 2(xz + yw)
    J[:, 2] = np.stack([2 * y, 2 * z, 2 * w, 2 * x], axis=1)
    # R10 = 2(xy + zw)
    J[:, 3] = np.stack([2 * z, 2 * y, 2 * x, 2 * w], axis=1)
    # R11 = 1-2(x^2+z^2)
    J[:, 4] = np.stack([zero, -4 * x, zero, -4 * z], axis=1)
    # R12 = 2(yz - xw)
    J[:, 5] = np.stack([-2 * x, -2 * w, 2 * z, 2 * y], axis=1)
    # R20 = 2(xz - yw)
    J[:, 6] = np.stack([-2 * y, 2 * z, -2 * w, 2 * x], axis=1)
    # R21 = 2(yz + xw)
    J[:, 7] = np.stack([2 * x, 2 * w, 2 * z, 2 * y], axis=1)
    # R22 = 1-2(x^2+y^2)
    J[:, 8] = np.stack([zero, -4 * x, -4 * y, zero], axis=1)
    return J


def quat_multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return np.array(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ],
        dtype=np.float64,
    )


def quat_conjugate(q: np.ndarray) -> np.ndarray:
    return np.array([q[0], -q[1], -q[2], -q[3]], dtype=np.float64)


def rot_to_quat(R: np.ndarray) -> np.ndarray:
    """Scalar-first quaternion from a rotation matrix (Shepperd's method)."""
    R = np.asarray(R, dtype=np.float64)
    t = np.trace(R)
    if t > 0:
        s = np.sqrt(t + 1.0) * 2.0
        q = np.array(
            [0.25 * s, (R[2, 1] - R[1, 2]) / s, (R[0, 2] - R[2, 0]) / s, (R[1, 0] - R[0, 1]) / s]
        )
    else:
        i = int(np.argmax(np.diag(R)))
        if i == 0:
            s = np.sqrt(1.0 + R[0, 0] - R[1, 1] - R[2, 2]) * 2.0
            q = np.array(
                [(R[2, 1] - R[1, 2]) / s, 0.25 * s, (R[0, 1] + R[1, 0]) / s, (R[0, 2] + R[2, 0]) / s]
            )
        elif i == 1:
            s = np.sqrt(1.0 - R[0, 0] + R[1, 1] - R[2, 2]) * 2.0
            q = np.array(
                [(R[0, 2] - R[2, 0]) / s, (R[0, 1] + R[1, 0]) / s, 0.25 * s, (R[1, 2] + R[2, 1]) / s]
            )
        else:
            s = np.sqrt(1.0 - R[0, 0] - R[1, 1] + R[2, 2]) * 2.0
            q = np.array(
                [(R[1, 0] - R[0, 1]) / s, (R[0, 2] + R[2, 0]) / s, (R[1, 2] + R[2, 1]) / s, 0.25 * s]
            )
    return quat_normalize(q)


def sigmoid(x):
    """Numerically open-interval sigmoid: output is strictly inside (0, 1)."""
    x = np.asarray(x, dtype=np.float64)
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    np.clip(out, np.nextafter(0.0, 1.0), np.nextafter(1.0, 0.0), out=out)
    return out if out.ndim else float(out)


def logit(p: float) -> float:
    return float(np.log(p) - np.log1p(-p))


def scale_activation(log_scale):
    """exp with an underflow floor so activated scales stay strictly positive."""
    s = np.exp(np.asarray(log_scale, dtype=np.float64))
    return np.maximum(s, 1e-300)

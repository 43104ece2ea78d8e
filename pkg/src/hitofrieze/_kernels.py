"""Batch symmetry test over one period of presence data.

Two interchangeable backends compute the same thing: for each candidate
isometry ``k`` (arrays ``su, sv, sz, shift2``) decide whether it maps the
front presence arrays ``V`` (shape ``(P, h-1)``) and ``H`` (shape ``(P, h)``)
onto themselves, with presence negated when ``sz = -1`` swaps the sides.
Checking the front suffices: the back is the pointwise negation of the
front, so its condition is the same equation.

The numba backend is used when numba imports and ``HITOFRIEZE_NUMBA`` is not
set to ``0``; otherwise the vectorised numpy path runs.
"""

from __future__ import annotations

import os

import numpy as np

_WANT_NUMBA = os.environ.get("HITOFRIEZE_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")

try:
    if not _WANT_NUMBA:
        raise ImportError
    from numba import njit
except ImportError:
    njit = None

BACKEND = "numba" if njit is not None else "numpy"


def symmetry_mask_numpy(V, H, su, sv, sz, shift2):
    P, hv = V.shape
    h = H.shape[1]
    su = su[:, None]
    b = np.where(su == 1, shift2[:, None] // 2, shift2[:, None])
    cols = np.arange(P)[None, :]
    flip = (sz == -1)[:, None, None]

    vi = (su * cols + b) % P
    hi = np.where(su == 1, cols + b, b - cols - 1) % P
    vrows = np.arange(hv)
    hrows = np.arange(h)
    vj = np.where((sv == 1)[:, None], vrows[None, :], h - 2 - vrows[None, :])
    hj = np.where((sv == 1)[:, None], hrows[None, :], h - 1 - hrows[None, :])

    v_img = V[vi[:, :, None], vj[:, None, :]]
    h_img = H[hi[:, :, None], hj[:, None, :]]
    v_ok = ((v_img != V[None]) == flip).all(axis=(1, 2))
    h_ok = ((h_img != H[None]) == flip).all(axis=(1, 2))
    return v_ok & h_ok


def _symmetry_mask_loops(V, H, su, sv, sz, shift2):
    P = V.shape[0]
    hv = V.shape[1]
    h = H.shape[1]
    n = su.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    for k in range(n):
        flip = sz[k] == -1
        b = shift2[k] // 2 if su[k] == 1 else shift2[k]
        ok = True
        for i in range(P):
            vi = (su[k] * i + b) % P
            for j in range(hv):
                vj = j if sv[k] == 1 else h - 2 - j
                if (V[i, j] != V[vi, vj]) != flip:
                    ok = False
                    break
            if not ok:
                break
            hi = (i + b) % P if su[k] == 1 else (b - i - 1) % P
            for j in range(h):
                hj = j if sv[k] == 1 else h - 1 - j
                if (H[i, j] != H[hi, hj]) != flip:
                    ok = False
                    break
            if not ok:
                break
        out[k] = ok
    return out


if njit is not None:
    symmetry_mask_numba = njit(cache=True)(_symmetry_mask_loops)
else:
    symmetry_mask_numba = None


def symmetry_mask(V, H, su, sv, sz, shift2, backend: str | None = None):
    """Boolean mask over the candidates; ``backend`` overrides the module default."""
    backend = backend or BACKEND
    if backend == "numba":
        if symmetry_mask_numba is None:
            raise RuntimeError("numba backend requested but numba is unavailable or disabled")
        return symmetry_mask_numba(V, H, su, sv, sz, shift2)
    return symmetry_mask_numpy(V, H, su, sv, sz, shift2)

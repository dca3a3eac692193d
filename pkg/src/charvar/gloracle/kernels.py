"""Integer kernels over group multiplication tables.

Each kernel exists twice: a numba ``@njit`` loop and a vectorised numpy
version.  Set ``CHARVAR_NO_NUMBA=1`` (or run without numba installed) to force
the numpy path; both give identical integer results.
"""

from __future__ import annotations

import os

import numpy as np

from ..exact import UsageError

_WANT_NUMBA = os.environ.get("CHARVAR_NO_NUMBA", "").strip().lower() in ("", "0", "false", "no")

try:
    if not _WANT_NUMBA:
        raise ImportError("numba disabled by CHARVAR_NO_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKENDS = ("numba", "numpy")


def default_backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


# -- numpy -------------------------------------------------------------------------


def commutator_counts_numpy(mul: np.ndarray, inv: np.ndarray) -> np.ndarray:
    """counts[z] = #{(x, y): x y x^-1 y^-1 = z}."""
    n = mul.shape[0]
    counts = np.zeros(n, dtype=np.int64)
    for x in range(n):
        xy = mul[x]
        c = mul[mul[xy, inv[x]], inv]
        counts += np.bincount(c, minlength=n)
    return counts


def class_structure_numpy(mul, inv, cls, reps, ncls) -> np.ndarray:
    """out[j, a, b] = #{u: cls(u) = a, cls(u^-1 z_j) = b} for z_j = reps[j]."""
    out = np.zeros((len(reps), ncls, ncls), dtype=np.int64)
    for j, z in enumerate(reps):
        b = cls[mul[inv, z]]
        np.add.at(out[j], (cls, b), 1)
    return out


# -- numba -------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def commutator_counts_numba(mul, inv):
        n = mul.shape[0]
        counts = np.zeros(n, dtype=np.int64)
        for x in range(n):
            ix = inv[x]
            for y in range(n):
                counts[mul[mul[mul[x, y], ix], inv[y]]] += 1
        return counts

    @njit(cache=True, nogil=True)
    def class_structure_numba(mul, inv, cls, reps, ncls):
        n = mul.shape[0]
        out = np.zeros((reps.shape[0], ncls, ncls), dtype=np.int64)
        for j in range(reps.shape[0]):
            z = reps[j]
            for u in range(n):
                out[j, cls[u], cls[mul[inv[u], z]]] += 1
        return out

else:
    commutator_counts_numba = None
    class_structure_numba = None


def _pick(backend: str | None, numba_fn, numpy_fn):
    backend = backend or default_backend()
    if backend not in BACKENDS:
        raise UsageError(f"unknown backend {backend!r}")
    if backend == "numba":
        if numba_fn is None:
            raise UsageError("numba backend requested but unavailable")
        return numba_fn
    return numpy_fn


def commutator_counts(mul, inv, backend: str | None = None) -> np.ndarray:
    return _pick(backend, commutator_counts_numba, commutator_counts_numpy)(mul, inv)


def class_structure(mul, inv, cls, reps, ncls, backend: str | None = None) -> np.ndarray:
    fn = _pick(backend, class_structure_numba, class_structure_numpy)
    return fn(mul, inv, cls, np.asarray(reps, dtype=np.int64), int(ncls))

"""Hot integer kernels with two interchangeable backends.

``GRPDER_BACKEND=numba`` (default when numba imports) compiles the loop
versions with ``@njit``; ``GRPDER_BACKEND=numpy`` uses the vectorised
versions below.  Both produce identical output; the benchmark in
``benchmarks/bench_kernels.py`` times them against each other.

Only residues modulo a prime below 2**31 go through here.  Rational
arithmetic never does.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is an optional accelerator
    HAVE_NUMBA = False


def _requested_backend() -> str:
    name = os.environ.get("GRPDER_BACKEND", "numba" if HAVE_NUMBA else "numpy").lower()
    if name not in ("numba", "numpy"):
        raise ValueError(f"GRPDER_BACKEND must be 'numba' or 'numpy', got {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        return "numpy"
    return name


BACKEND = _requested_backend()


# ---------------------------------------------------------------------------
# loop versions (compiled by numba)
# ---------------------------------------------------------------------------


def _inv_mod_loop(x, p):
    # extended Euclid; x is nonzero mod p
    t, new_t = 0, 1
    r, new_r = p, x % p
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    if t < 0:
        t += p
    return t


def _rref_mod_p_loop(m, p):
    a = m.copy() % p
    rows, cols = a.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            for k in range(cols):
                tmp = a[r, k]
                a[r, k] = a[sel, k]
                a[sel, k] = tmp
        inv = _inv_mod_jit(a[r, c], p)
        for k in range(c, cols):
            a[r, k] = a[r, k] * inv % p
        for i in range(rows):
            if i == r:
                continue
            f = a[i, c]
            if f == 0:
                continue
            for k in range(c, cols):
                if a[r, k] != 0:
                    a[i, k] = (a[i, k] - f * a[r, k]) % p
        pivots[r] = c
        r += 1
    return a, pivots[:r]


def _two_sided_index_loop(table, left, right):
    t = left.shape[0]
    size = table.shape[0]
    out = np.empty((t, size), dtype=np.int64)
    for s in range(t):
        u = left[s]
        v = right[s]
        for g in range(size):
            out[s, g] = table[table[u, g], v]
    return out


def _convolve_mod_p_loop(table, x, y, p):
    size = table.shape[0]
    out = np.zeros(size, dtype=np.int64)
    for g in range(size):
        if x[g] == 0:
            continue
        for h in range(size):
            if y[h] == 0:
                continue
            k = table[g, h]
            out[k] = (out[k] + x[g] * y[h]) % p
    return out


# ---------------------------------------------------------------------------
# numpy versions
# ---------------------------------------------------------------------------


def _rref_mod_p_numpy(m, p):
    p = int(p)
    a = np.mod(np.array(m, dtype=np.int64), p)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        sel = r + int(nz[0])
        if sel != r:
            a[[r, sel]] = a[[sel, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        f = a[:, c].copy()
        f[r] = 0
        hit = np.nonzero(f)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(f[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, np.array(pivots, dtype=np.int64)


def _two_sided_index_numpy(table, left, right):
    left = np.asarray(left, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    return table[table[left, :], right[:, None]]


def _convolve_mod_p_numpy(table, x, y, p):
    out = np.zeros(table.shape[0], dtype=np.int64)
    gx = np.nonzero(x)[0]
    hy = np.nonzero(y)[0]
    if gx.size and hy.size:
        prod = np.outer(x[gx], y[hy]) % p
        np.add.at(out, table[np.ix_(gx, hy)].ravel(), prod.ravel())
    return out % p


if HAVE_NUMBA:
    _inv_mod_jit = njit(cache=True)(_inv_mod_loop)
    _rref_mod_p_jit = njit(cache=True)(_rref_mod_p_loop)
    _two_sided_index_jit = njit(cache=True)(_two_sided_index_loop)
    _convolve_mod_p_jit = njit(cache=True)(_convolve_mod_p_loop)
else:  # pragma: no cover
    _inv_mod_jit = _inv_mod_loop


IMPLEMENTATIONS = {
    "numpy": {
        "rref_mod_p": _rref_mod_p_numpy,
        "two_sided_index": _two_sided_index_numpy,
        "convolve_mod_p": _convolve_mod_p_numpy,
    },
}
if HAVE_NUMBA:
    IMPLEMENTATIONS["numba"] = {
        "rref_mod_p": _rref_mod_p_jit,
        "two_sided_index": _two_sided_index_jit,
        "convolve_mod_p": _convolve_mod_p_jit,
    }


def rref_mod_p(m: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Canonical RREF of an int64 matrix over F_p; returns (reduced, pivot columns)."""
    m = np.ascontiguousarray(m, dtype=np.int64)
    return IMPLEMENTATIONS[BACKEND]["rref_mod_p"](m, np.int64(p))


def two_sided_index(table: np.ndarray, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """``out[s, g] = index of left[s] * g * right[s]`` for every element index ``g``."""
    return IMPLEMENTATIONS[BACKEND]["two_sided_index"](
        np.ascontiguousarray(table, dtype=np.int64),
        np.ascontiguousarray(left, dtype=np.int64),
        np.ascontiguousarray(right, dtype=np.int64),
    )


def convolve_mod_p(table: np.ndarray, x: np.ndarray, y: np.ndarray, p: int) -> np.ndarray:
    """Group-algebra product of dense residue vectors under a Cayley table."""
    return IMPLEMENTATIONS[BACKEND]["convolve_mod_p"](
        np.ascontiguousarray(table, dtype=np.int64),
        np.ascontiguousarray(x, dtype=np.int64),
        np.ascontiguousarray(y, dtype=np.int64),
        np.int64(p),
    )

"""Hot inner loops, in two interchangeable implementations.

The incidence structure is CSR-like: ``edge_ptr`` (length ``n_edges +
1``) delimits slices of ``edge_vertices``, so edge ``e`` owns the
vertices ``edge_vertices[edge_ptr[e]:edge_ptr[e + 1]]``.  The three
incidence kernels below are the primitives every morphological operator
reduces to; the remaining two serve the denoising bench (window
majority vote and seeded pixel flips).

Each kernel has a numba ``@njit`` variant and a vectorized numpy
variant producing bit-identical results.  ``HYPERMORPH_BACKEND``
selects the default (see :mod:`hypermorph.backend`); ``use_backend``
swaps paths temporarily, which the test suite and the backend
benchmark rely on.
"""

from contextlib import contextmanager

import numpy as np

from . import backend

# splitmix64 constants; the flip generator applies the splitmix64
# finalizer to seed + counter * GOLDEN, reproducing the reference
# splitmix64 output stream for that seed.
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


# ---------------------------------------------------------------------------
# pure-numpy path

def _cover_from_edges_np(n_vertices, edge_ptr, edge_vertices, edge_sel):
    out = np.zeros(n_vertices, dtype=np.bool_)
    per_slot = np.repeat(edge_sel, np.diff(edge_ptr))
    out[edge_vertices[per_slot]] = True
    return out


def _edges_inside_np(edge_ptr, edge_vertices, vertex_sel):
    n_edges = edge_ptr.size - 1
    if n_edges == 0:
        return np.zeros(0, dtype=np.bool_)
    return np.logical_and.reduceat(vertex_sel[edge_vertices], edge_ptr[:-1])


def _edges_touching_np(edge_ptr, edge_vertices, vertex_sel):
    n_edges = edge_ptr.size - 1
    if n_edges == 0:
        return np.zeros(0, dtype=np.bool_)
    return np.logical_or.reduceat(vertex_sel[edge_vertices], edge_ptr[:-1])


def _window_majority_np(pixels, k):
    r = k // 2
    padded = np.pad(pixels, r, mode="edge").astype(np.int64)
    sat = padded.cumsum(axis=0).cumsum(axis=1)
    sat = np.pad(sat, ((1, 0), (1, 0)))
    win = sat[k:, k:] - sat[:-k, k:] - sat[k:, :-k] + sat[:-k, :-k]
    return 2 * win > k * k


def _bernoulli_flips_np(n, seed, ratio):
    counter = np.arange(1, n + 1, dtype=np.uint64)
    z = np.uint64(seed) + counter * _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    z = z ^ (z >> np.uint64(31))
    u = (z >> np.uint64(11)).astype(np.float64) * 2.0**-53
    return u < ratio


_NUMPY_KERNELS = {
    "cover_from_edges": _cover_from_edges_np,
    "edges_inside": _edges_inside_np,
    "edges_touching": _edges_touching_np,
    "window_majority": _window_majority_np,
    "bernoulli_flips": _bernoulli_flips_np,
}


# ---------------------------------------------------------------------------
# numba path

def _build_numba_kernels():
    from numba import njit

    opts = backend.JIT_OPTIONS

    @njit(**opts)
    def cover_from_edges(n_vertices, edge_ptr, edge_vertices, edge_sel):
        out = np.zeros(n_vertices, dtype=np.bool_)
        for e in range(edge_sel.size):
            if edge_sel[e]:
                for s in range(edge_ptr[e], edge_ptr[e + 1]):
                    out[edge_vertices[s]] = True
        return out

    @njit(**opts)
    def edges_inside(edge_ptr, edge_vertices, vertex_sel):
        n_edges = edge_ptr.size - 1
        out = np.empty(n_edges, dtype=np.bool_)
        for e in range(n_edges):
            keep = True
            for s in range(edge_ptr[e], edge_ptr[e + 1]):
                if not vertex_sel[edge_vertices[s]]:
                    keep = False
                    break
            out[e] = keep
        return out

    @njit(**opts)
    def edges_touching(edge_ptr, edge_vertices, vertex_sel):
        n_edges = edge_ptr.size - 1
        out = np.empty(n_edges, dtype=np.bool_)
        for e in range(n_edges):
            hit = False
            for s in range(edge_ptr[e], edge_ptr[e + 1]):
                if vertex_sel[edge_vertices[s]]:
                    hit = True
                    break
            out[e] = hit
        return out

    @njit(**opts)
    def window_majority(pixels, k):
        h, w = pixels.shape
        r = k // 2
        half = (k * k) // 2
        out = np.empty((h, w), dtype=np.bool_)
        for y in range(h):
            for x in range(w):
                count = 0
                for dy in range(-r, r + 1):
                    yy = min(max(y + dy, 0), h - 1)
                    for dx in range(-r, r + 1):
                        xx = min(max(x + dx, 0), w - 1)
                        if pixels[yy, xx]:
                            count += 1
                out[y, x] = count > half
        return out

    @njit(**opts)
    def bernoulli_flips(n, seed, ratio):
        out = np.empty(n, dtype=np.bool_)
        for i in range(n):
            z = seed + np.uint64(i + 1) * _GOLDEN
            z = (z ^ (z >> np.uint64(30))) * _MIX1
            z = (z ^ (z >> np.uint64(27))) * _MIX2
            z = z ^ (z >> np.uint64(31))
            u = np.float64(z >> np.uint64(11)) * 2.0**-53
            out[i] = u < ratio
        return out

    return {
        "cover_from_edges": cover_from_edges,
        "edges_inside": edges_inside,
        "edges_touching": edges_touching,
        "window_majority": window_majority,
        "bernoulli_flips": bernoulli_flips,
    }


_KERNEL_SETS = {backend.NUMPY: _NUMPY_KERNELS}
if backend.numba_available():
    _KERNEL_SETS[backend.NUMBA] = _build_numba_kernels()

_active_name = backend.resolve_backend()
_active = _KERNEL_SETS[_active_name]


def active_backend() -> str:
    """Name of the kernel set currently in use ('numba' or 'numpy')."""
    return _active_name


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_KERNEL_SETS))


@contextmanager
def use_backend(name: str):
    """Temporarily switch kernel implementations (for tests/benchmarks)."""
    global _active, _active_name
    resolved = backend.resolve_backend(name)
    previous = _active_name
    _active, _active_name = _KERNEL_SETS[resolved], resolved
    try:
        yield
    finally:
        _active, _active_name = _KERNEL_SETS[previous], previous


# ---------------------------------------------------------------------------
# dispatching entry points used by the rest of the package

def cover_from_edges(n_vertices, edge_ptr, edge_vertices, edge_sel):
    """Vertices covered by at least one selected edge."""
    return _active["cover_from_edges"](n_vertices, edge_ptr, edge_vertices, edge_sel)


def edges_inside(edge_ptr, edge_vertices, vertex_sel):
    """Edges whose vertices all lie in the selection."""
    return _active["edges_inside"](edge_ptr, edge_vertices, vertex_sel)


def edges_touching(edge_ptr, edge_vertices, vertex_sel):
    """Edges sharing at least one vertex with the selection."""
    return _active["edges_touching"](edge_ptr, edge_vertices, vertex_sel)


def window_majority(pixels, k):
    """Majority vote over the k-by-k neighborhood, edges replicated."""
    return _active["window_majority"](np.ascontiguousarray(pixels), k)


def bernoulli_flips(n, seed, ratio):
    """Boolean flip mask: position i flips with probability ``ratio``.

    Deterministic in (n, seed, ratio) across platforms and backends: the
    i-th draw mixes ``seed + (i+1) * GOLDEN`` through the splitmix64
    finalizer and compares the top 53 bits against ``ratio``.
    """
    return _active["bernoulli_flips"](n, np.uint64(seed), float(ratio))

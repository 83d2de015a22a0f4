"""Hot-loop kernels with two interchangeable backends.

The numba backend is the default; set TWB_NO_NUMBA=1 (before import) to
select the pure-numpy fallback.  If numba is not importable the fallback is
selected silently.  benchmarks/bench_kernels.py compares the two.
"""

from .. import config

if config.numba_disabled():
    from . import _numpy_impl as _impl
    BACKEND = "numpy"
else:
    try:
        from . import _numba_impl as _impl
        BACKEND = "numba"
    except ImportError:
        from . import _numpy_impl as _impl
        BACKEND = "numpy"

orbit_labels = _impl.orbit_labels
batch_orbit_counts = _impl.batch_orbit_counts
batch_extend = _impl.batch_extend
batch_edge_check = _impl.batch_edge_check
first_nonassociative = _impl.first_nonassociative
first_hom_violation = _impl.first_hom_violation


def numpy_backend():
    from . import _numpy_impl
    return _numpy_impl


def numba_backend():
    """Raises ImportError when numba is unavailable."""
    from . import _numba_impl
    return _numba_impl

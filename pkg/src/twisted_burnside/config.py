"""Runtime limits and environment knobs.

TWB_ORDER_CAP   overrides the default group-order cap (Cayley-table memory
                grows with order squared, hence a cap at all).
TWB_NO_NUMBA    set to a non-empty value other than "0" to force the pure
                numpy kernel backend; read once at import of
                twisted_burnside.kernels.
"""

import os

DEFAULT_ORDER_CAP = 20000

# Full n^3 / n^2 audits below this order; deterministic sampling above.
FULL_AUDIT_MAX_ORDER = 512
AUDIT_SAMPLE_COUNT = 65536
AUDIT_SEED = 0x7B5

DEFAULT_MAX_GENERATORS = 3
DEFAULT_CANDIDATE_CAP = 2_000_000


def order_cap() -> int:
    raw = os.environ.get("TWB_ORDER_CAP")
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"TWB_ORDER_CAP must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"TWB_ORDER_CAP must be positive, got {cap}")
    return cap


def numba_disabled() -> bool:
    raw = os.environ.get("TWB_NO_NUMBA", "")
    return raw not in ("", "0")

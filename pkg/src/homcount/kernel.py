"""Backend selection for the brute-force counting walks.

The compiled extension is used when it was built; otherwise the pure-Python
twin takes over transparently. Set HOMCOUNT_PURE=1 to force the pure backend
(used by the benchmark and for debugging).
"""

from __future__ import annotations

import os

if os.environ.get("HOMCOUNT_PURE"):
    from homcount import _countwalk_py as _impl

    BACKEND = "python"
else:
    try:
        from homcount import _countwalk as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from homcount import _countwalk_py as _impl

        BACKEND = "python"

count_models = _impl.count_models
count_surjective = _impl.count_surjective
count_ordered_set_partitions = _impl.count_ordered_set_partitions

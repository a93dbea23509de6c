"""Backend selection for the expansion kernels.

The compiled ``_ckernels`` extension is used when it imports and the
weight is within its 64-bit range; otherwise calls go to the pure-Python
twin.  Setting ``NCSF_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels

M_TO_PSI = _pykernels.M_TO_PSI
F_TO_PSI = _pykernels.F_TO_PSI
PSI_TO_M = _pykernels.PSI_TO_M
S_TO_PSI = _pykernels.S_TO_PSI
PSI_TO_S = _pykernels.PSI_TO_S

_compiled = None
if os.environ.get("NCSF_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = _compiled.BACKEND if _compiled is not None else _pykernels.BACKEND


def coarsening_terms(kind, parts):
    if _compiled is not None and sum(parts) <= _compiled.MAX_WEIGHT:
        return _compiled.coarsening_terms(kind, parts)
    return _pykernels.coarsening_terms(kind, parts)


def refinement_terms(kind, parts):
    if _compiled is not None and sum(parts) <= _compiled.MAX_WEIGHT:
        return _compiled.refinement_terms(kind, parts)
    return _pykernels.refinement_terms(kind, parts)

"""Kernel selection: compiled extension when importable, Python otherwise.

Set ``HOLOREC_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

python_backend = _pykernels

if os.environ.get("HOLOREC_PURE_PYTHON", "") not in ("", "0"):
    compiled_backend = None
else:
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

active = compiled_backend or python_backend
BACKEND = active.BACKEND

trim = active.trim
add = active.add
sub = active.sub
scale = active.scale
mul = active.mul
divmod_ = active.divmod_
taylor_shift = active.taylor_shift
horner = active.horner
roots_mod_p = active.roots_mod_p

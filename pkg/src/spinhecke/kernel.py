"""Kernel backend selection.

The compiled extension (_kernel_cy) and the pure module (_kernel_py) export
the same functions with identical semantics; the extension is preferred when
importable.  Set SPINHECKE_KERNEL=py or =cy to force a backend (cy raises if
the extension is missing; the default silently falls back to pure Python).
"""

import os

_choice = os.environ.get("SPINHECKE_KERNEL", "")
if _choice not in ("", "py", "cy"):
    raise ImportError(f"SPINHECKE_KERNEL must be 'py' or 'cy', got {_choice!r}")

if _choice == "py":
    from . import _kernel_py as _impl
elif _choice == "cy":
    from . import _kernel_cy as _impl
else:
    try:
        from . import _kernel_cy as _impl
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND

cliff_mul = _impl.cliff_mul
conj_mask = _impl.conj_mask
perm_compose = _impl.perm_compose
perm_inverse = _impl.perm_inverse
mono_mul = _impl.mono_mul
terms_mul = _impl.terms_mul
terms_axpy = _impl.terms_axpy
terms_scale = _impl.terms_scale
ech_reduce = _impl.ech_reduce
word_perm = _impl.word_perm
word_pflip = _impl.word_pflip
mono_apply = _impl.mono_apply
terms_apply = _impl.terms_apply
word_E = _impl.word_E
word_F = _impl.word_F

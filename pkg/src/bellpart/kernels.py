"""Kernel selection: compiled extension when available, pure Python otherwise."""

try:
    from bellpart import _ckernels as _impl  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    from bellpart import _pykernels as _impl

IMPL = _impl.IMPL
WEIGHT_CLASSICAL = _impl.WEIGHT_CLASSICAL
WEIGHT_ODD = _impl.WEIGHT_ODD
extend_weighted_rows = _impl.extend_weighted_rows

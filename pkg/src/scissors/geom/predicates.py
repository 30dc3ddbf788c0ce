"""Kernel selection: compiled predicates when available, pure otherwise."""

try:
    from . import _predicates_cy as _impl
    KERNEL = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    from . import _predicates_py as _impl
    KERNEL = "pure"

hnormalize = _impl.hnormalize
hdet = _impl.hdet
orient = _impl.orient
hyperplane = _impl.hyperplane
apply_functional = _impl.apply_functional
side = _impl.side
cut_point = _impl.cut_point
centroid = _impl.centroid

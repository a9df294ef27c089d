"""Float64 kernel selection: the compiled Cython extension when built,
otherwise the pure-Python fallback.  ``KERNEL_IMPL`` records which one is
active ("compiled" or "python")."""

try:
    from ._speedups import gemm_f64, gram_f64
    KERNEL_IMPL = "compiled"
except ImportError:  # extension not built
    from .fallback import gemm_f64, gram_f64
    KERNEL_IMPL = "python"

__all__ = ["gemm_f64", "gram_f64", "KERNEL_IMPL"]

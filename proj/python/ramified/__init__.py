"""Diamond-graph spectral zeta function, heat trace and entanglement entropy."""

from ._core import (
    DomainError,
    GraphSpec,
    PoleError,
    PrecisionError,
    QuadratureError,
    ResourceError,
    correction_coefficients,
    effective_action,
    effective_action_quadrature,
    entropy_leading,
    entropy_tilde,
    entropy_tilde_limit,
    gamma,
    make_graph,
    pole,
    pole_weight,
    riemann_zeta,
    spectral_area,
    spectral_area_limit,
    theta_segment,
    trace_asymptotic,
    trace_direct,
    zeta_closed,
    zeta_zero,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""distribution module literals"""

from power_maxwell.core.value_dicts_base import ValueDictsBase
from power_maxwell.core.app import App

app: App = App()


class Literals(ValueDictsBase):
    """ValueDicts for the distribution module."""

    _titles = {
        "dist_shape_table_title": _("Shape measures by parameter pair"),
    }
    _info = {
        "dist_quadrature_tail": _("Integrating {name} on [0, {lower:.6g}] + [{lower:.6g}, {upper:.6g}] + tail"),
        "dist_mode_at_zero": _("Density is nonincreasing for beta={beta} <= 1/3; mode reported as 0"),
        "dist_sampler_created": _("Sampler created for alpha={alpha}, beta={beta}"),
    }
    _errors = {
        "dist_params_not_positive": _("Parameters must be positive, got alpha={alpha}, beta={beta}."),
        "dist_x_negative": _("Argument must be nonnegative, got x={x}."),
        "dist_x_not_positive": _("Argument must be positive, got x={x}."),
        "dist_infinite_density_at_zero": _("Density is infinite at x=0 when 3*beta-1 < 0 (beta={beta})."),
        "dist_survival_underflow": _("Survival underflows to zero at x={x}; ratio is not representable."),
        "dist_cdf_zero": _("Distribution function is zero at x={x}; ratio is undefined."),
        "dist_probability_out_of_range": _("Probability must lie in [0, 1), got {prob}."),
        "dist_level_out_of_range": _("Value must lie in (0, 1], got {value}."),
        "dist_sample_size": _("Sample size must be at least 1, got n={n}."),
        "dist_moment_order": _("Moment order must be a positive integer, got r={r}."),
        "dist_real_moment_order": _("Moment of order {order} does not exist: 3*beta + order must be positive."),
        "dist_mgf_divergent": _("Generating function diverges at t={t} for alpha={alpha}, beta={beta}."),
        "dist_mgf_overflow": _("Generating function at t={t} for alpha={alpha}, beta={beta} exceeds the "
                               "float range."),
        "dist_entropy_order": _("Entropy order {order} is not allowed for {kind} entropy."),
        "dist_entropy_divergent": _("Integral of f^{order} diverges for beta={beta}."),
        "dist_residual_age": _("Age must be positive, got t={t}."),
        "dist_residual_survival_zero": _("Survival is zero at age t={t}; residual life is degenerate."),
        "dist_reversed_residual_domain": _("Reversed residual argument must satisfy 0 <= x < t, got x={x}, t={t}."),
        "dist_conditioning_point": _("Conditioning point must be nonnegative, got k={k}."),
        "dist_quadrature_failed": _("Quadrature of {name} did not reach tolerance: estimated error {error:.2e}."),
        "dist_grid_too_short": _("Ordering checks need a grid of at least two positive points."),
    }

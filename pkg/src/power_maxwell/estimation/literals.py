"""estimation module literals"""

from power_maxwell.core.value_dicts_base import ValueDictsBase
from power_maxwell.core.app import App

app: App = App()


class Literals(ValueDictsBase):
    """ValueDicts for the estimation module."""

    _titles = {
        "est_fit_title": _("Maximum likelihood fit of {label} (n={n})"),
    }
    _info = {
        "est_mle_fitted": _("MLE alpha={alpha:.6g}, beta={beta:.6g}, loglik={loglik:.6g} after {iterations} "
                            "iterations"),
        "est_bracket": _("Profiled score bracketed on [{lower:.6g}, {upper:.6g}]"),
        "est_oracle_box_expanded": _("Posterior mass {mass:.2e} near the box edges; expanding the box once"),
        "est_lindley": _("Lindley estimates alpha={alpha:.6g}, beta={beta:.6g}"),
        "est_oracle": _("Quadrature posterior means alpha={alpha:.6g}, beta={beta:.6g}"),
    }
    _errors = {
        "est_data_not_positive": _("Observations must be positive and finite, got {value}."),
        "est_data_too_short": _("At least {minimum} observations are needed, got {n}."),
        "est_no_root": _("Profiled score keeps its sign up to beta={beta:.6g}; the fit did not converge."),
        "est_singular_information": _("Observed information is not positive definite at alpha={alpha:.6g}, "
                                      "beta={beta:.6g}; variances withheld."),
        "est_level_out_of_range": _("Confidence level must lie in (0, 1), got {level}."),
        "est_t_eval": _("Evaluation time must be positive, got {t}."),
        "est_prior_not_positive": _("Prior hyper-parameters must be positive, got {values}."),
        "est_box_escape": _("Posterior mass {mass:.2e} remains at the box edges after expansion."),
        "est_not_converged": _("A converged maximum likelihood fit is required."),
        "est_hazard_unavailable": _("Hazard at t={t} is not representable for the fitted parameters."),
        "est_beta_not_positive": _("Shape must be positive, got beta={beta}."),
        "est_scale_factor": _("Scale factor must be positive, got {factor}."),
    }

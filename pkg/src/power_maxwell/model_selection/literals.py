"""model_selection module literals"""

from power_maxwell.core.value_dicts_base import ValueDictsBase
from power_maxwell.core.app import App

app: App = App()


class Literals(ValueDictsBase):
    """ValueDicts for the model_selection module."""

    _titles = {
        "ms_ranking_title": _("Goodness of fit for {label} (n={n})"),
        "ms_summary_title": _("Summary of {label}"),
    }
    _info = {
        "ms_model_fitted": _("{model}: -logL={neg_loglik:.4f}, AIC={aic:.4f}, BIC={bic:.4f}, K-S={ks:.4f}"),
        "ms_aicc_absent": _("AICC is undefined for n={n} <= k+1={limit}"),
        "ms_skewness_undefined": _("Sample variance is zero; skewness and kurtosis are undefined"),
        "ms_kurtosis_convention": _("Kurtosis reported raw ({raw:.4f}) and excess ({excess:.4f})"),
    }
    _errors = {
        "ms_parameter_count": _("Parameter count must be a nonnegative integer, got k={k}."),
        "ms_sample_size": _("Sample size must be positive, got n={n}."),
        "ms_cdf_out_of_range": _("Model distribution function returned {value} outside [0, 1]."),
        "ms_unknown_model": _("Unknown model {name}; registered models are {names}."),
        "ms_fit_not_converged": _("{model} fit on {label} did not converge; no goodness-of-fit row is reported."),
    }

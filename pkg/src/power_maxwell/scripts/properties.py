""" Evaluates the distributional properties of one parameter pair """

import logging
from typing import Callable, Dict, Iterable, Optional

import power_maxwell.core.log_tools as log_tools
from power_maxwell.core.app import App
from power_maxwell.core.exceptions import DivergenceError, ParameterDomainError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution import core, moments
from power_maxwell.distribution.constants import EntropyKind
from power_maxwell.distribution.entropy import EntropyOrder, differential_entropy, entropy
from power_maxwell.distribution.lifetime import ResidualSpec, mean_residual_life
from power_maxwell.distribution.params import Params
from power_maxwell.scripts.constants import (ENTROPY_ORDERS, EXIT_SUCCESS, GENERALIZED_ENTROPY_ORDERS,
                                             LORENZ_POINTS)
from power_maxwell.scripts.literals import Literals as ScriptsLiterals
from power_maxwell.scripts.script_common import RunManifest, write_report

app: App = App()
literals = LiteralsCore([ScriptsLiterals])


def _guarded(kind: str, order: float, compute: Callable[[], float]) -> Optional[float]:
    try:
        return compute()
    except (DivergenceError, ParameterDomainError) as error:
        logging.info(literals.get("pmad_entropy_skipped", kind=kind, order=order, reason=error))
        return None


def entropy_grid(p: Params, orders: Iterable[float] = ENTROPY_ORDERS,
                 generalized_orders: Iterable[float] = GENERALIZED_ENTROPY_ORDERS) -> Dict[str, Dict[str, float]]:
    """Renyi, delta and generalized entropies by order; None where the integral or moment does not exist."""

    grid = {}
    for kind, kind_orders in ((EntropyKind.RENYI, orders), (EntropyKind.DELTA, orders),
                              (EntropyKind.GENERALIZED, generalized_orders)):
        grid[kind.value] = {str(order): _guarded(kind.value, order,
                                                 lambda k=kind, o=order: entropy(p, EntropyOrder(o, k)))
                            for order in kind_orders}
    return grid


def properties(p: Params, t_eval: float) -> dict:
    """Shape summary, reliability at t_eval, median, mean deviation, entropies and Lorenz points."""

    shape = moments.shape_summary(p)
    return {
        "shape": shape.as_dict(),
        "mtsf": moments.mtsf(p),
        "standard_deviation": moments.standard_deviation(p),
        "median": core.quantile(p, 0.5),
        "median_empirical": moments.median_empirical(p),
        "mode_at_zero": moments.mode(p).at_zero,
        "mean_deviation": moments.mean_deviation(p),
        "reliability": {"t": t_eval, "survival": core.survival(p, t_eval), "hazard": core.hazard(p, t_eval),
                        "cumulative_hazard": core.cumulative_hazard(p, t_eval),
                        "mean_residual_life": mean_residual_life(ResidualSpec(p, t_eval))},
        "entropy": {**entropy_grid(p), "differential": differential_entropy(p)},
        "lorenz": [{"level": nu, "lorenz": lorenz, "bonferroni": bonferroni}
                   for nu, lorenz, bonferroni in moments.lorenz_points(p, LORENZ_POINTS)],
    }


def main(manifest: RunManifest) -> int:
    p = manifest.params
    logging.info(literals.get("pmad_properties_title", alpha=p.alpha, beta=p.beta))
    results = properties(p, manifest.flag("t_eval", app.settings.t_eval))
    shape = results["shape"]
    log_tools.log_table(list(shape), [tuple(float(value) for value in shape.values())])
    write_report(manifest, results)
    return EXIT_SUCCESS

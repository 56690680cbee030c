"""Published formulas and values this package does not follow, with what it does instead."""

from dataclasses import asdict, dataclass
from typing import List, Tuple

import power_maxwell.core.log_tools as log_tools
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.reference.literals import Literals as ReferenceLiterals

literals = LiteralsCore([ReferenceLiterals])


@dataclass(frozen=True)
class Erratum:
    """One discrepancy.

    Attributes:
        topic: What the entry is about.
        printed: The published form or value.
        implemented: What the package computes.
        resolution: How the disagreement was settled.
    """

    topic: str
    printed: str
    implemented: str
    resolution: str


ERRATA: Tuple[Erratum, ...] = (
    Erratum("mean deviation",
            "simplified closed form that disagrees with its own definition",
            "2 mu F(mu) - 2 * partial first moment up to mu",
            "quadrature of E|X - mu| is authoritative, closed form is a cross-check"),
    Erratum("moment generating function",
            "series whose summation index and moment order are mixed",
            "sum over r of t^r E[X^r] / r!",
            "direct quadrature of E[exp(tX)] is authoritative"),
    Erratum("conditional moments",
            "lower incomplete gamma in the tail integral",
            "E[X^r] * Q((3 beta + r) / (2 beta), alpha k^(2 beta)) / S(k)",
            "upper regularized gamma, checked against quadrature"),
    Erratum("Lorenz and Bonferroni curves",
            "prefactor that does not cancel against the mean",
            "L(nu) = P((3 beta + 1) / (2 beta), alpha q^(2 beta)) with q the nu-quantile",
            "closed form derived from the partial moment, checked against quadrature"),
    Erratum("Renyi entropy",
            "closed form with mixed order symbols and an extra log term",
            "log of C^d (d alpha)^(-s) Gamma(s) / (2 beta) divided by 1 - d",
            "derived from the gamma integral, checked against quadrature"),
    Erratum("reversed residual life",
            "denominators evaluated at the residual argument x",
            "denominators F(t) for the density and F(t - x) for the hazard",
            "read as the age t, which makes the density integrate to one"),
    Erratum("median",
            "worked value 0.4191 for (1, 1) from mean, median and mode relation",
            "1.0856 from the same relation, exact median 1.0877",
            "arithmetic recomputed; exact median from the quantile function"),
    Erratum("stochastic ordering",
            "likelihood ratio order for all parameter values",
            "order for alpha1 <= alpha2 at equal beta",
            "unequal shapes are checked numerically and may fail"),
    Erratum("Lindley third derivative l21",
            "nonzero mixed term",
            "0, the log likelihood is linear in alpha apart from 3n/2 ln alpha",
            "derivative recomputed"),
    Erratum("Lindley tau elements",
            "reciprocals of the information elements",
            "elements of the inverse of the negated Hessian",
            "inverse is the default; reciprocal variant kept for comparison"),
    Erratum("Lindley cubic term factor",
            "alpha / beta in front of the cubic correction",
            "1 / 2, as in the general expansion",
            "factor taken from the general two-parameter expansion"),
    Erratum("AICC",
            "values about 3.9 below AIC",
            "AIC + 2k(k + 1) / (n - k - 1), e.g. 736.8599 for the remission data",
            "standard formula"),
    Erratum("shape table skewness and kurtosis for beta >= 1.5",
            "(2, 2) repeats the (0.5, 1.5) skewness 0.0102; kurtosis falls to 0.1072 at (5, 5)",
            "computed values; kurtosis stays above 1 + skewness and rises toward the large-beta limit",
            "cells reported, not asserted"),
    Erratum("simulation table beta at n = 50",
            "average beta_ml 0.7453, beta_bl 0.7397 and ACL_beta 0.3644 at (0.75, 0.75)",
            "average beta_ml about 0.768 (standard error 0.002) and ACL_beta about 0.324",
            "alpha columns and ACL_alpha checked against the printed row, beta columns reported"),
    Erratum("shape table rounding",
            "mean 3.0008 at (0.5, 0.5), Maxwell skewness 0.2384",
            "exact mean 3, Maxwell skewness 0.23589",
            "published cells compared with a 2e-3 tolerance"),
)


def log_errata(errata: Tuple[Erratum, ...] = ERRATA):
    """Logs the ledger as an indented list under its title."""

    lines = [literals.get("ref_erratum", **asdict(erratum)) for erratum in errata]
    log_tools.log_indented_list(literals.get("ref_errata_title"), lines, log_tools.LogLevel.info)


def errata_records(errata: Tuple[Erratum, ...] = ERRATA) -> List[dict]:
    """The ledger as plain dicts, for report.json."""

    return [asdict(erratum) for erratum in errata]

"""Unit tests for the simulation.study file"""

import math
from dataclasses import replace
from unittest.mock import MagicMock, call, patch

import numpy as np
import pytest

import power_maxwell.simulation.study as sut
from power_maxwell.core.exceptions import ParameterDomainError, StudyAbortedError
from power_maxwell.distribution import core
from power_maxwell.distribution.moments import mtsf
from power_maxwell.distribution.params import Params
from power_maxwell.simulation.constants import ESTIMATE_COLUMNS, INTERVAL_COLUMNS, Scenario

# region SimConfig


@pytest.mark.parametrize("changes", [{"replications": 99}, {"n": 2}, {"workers": 0}, {"level": 1.0},
                                     {"prior_variance": 0.0}, {"t_eval": -1.0}])
def test_sim_config_given_invalid_setting_then_raises(studies, changes):
    """Given a setting outside its domain, then raises ParameterDomainError"""

    with pytest.raises(ParameterDomainError):
        replace(studies.small, **changes)


def test_sim_config_as_dict_given_config_then_flattens_params(studies):
    """Given a config, then as_dict holds the parameters as a mapping"""

    # Act
    result = studies.small.as_dict()
    # Assert
    assert result["true_params"] == {"alpha": 0.75, "beta": 0.75}
    assert result["n"] == 30 and result["replications"] == 100

# endregion

# region replicate(cfg, seed, index)


def test_replicate_given_same_seed_then_returns_same_estimates(studies):
    """Given the same child seed, then the replication is reproduced exactly"""

    # Arrange
    seed = np.random.SeedSequence(5).spawn(1)[0]
    # Act
    first = sut.replicate(studies.small, seed, 0)
    second = sut.replicate(studies.small, seed, 0)
    # Assert
    assert first == second
    assert len(first.estimates) == len(ESTIMATE_COLUMNS)
    assert len(first.intervals) == len(INTERVAL_COLUMNS)


def test_replicate_given_fit_failure_then_returns_excluded_replication(studies):
    """Given a fit that does not converge, then the replication is returned without estimates"""

    # Arrange
    seed = np.random.SeedSequence(5).spawn(1)[0]
    with patch.object(sut, "fit_mle") as fit_mock:
        fit_mock.return_value = MagicMock(converged=False)
        # Act
        result = sut.replicate(studies.small, seed, 3)
    # Assert
    assert result.estimates is None
    assert result.index == 3
    assert result.reason

# endregion

# region aggregate(cfg, replications)


def _truth(cfg: sut.SimConfig):
    p = cfg.true_params
    return (p.alpha, p.beta, mtsf(p), core.survival(p, cfg.t_eval), core.hazard(p, cfg.t_eval), p.alpha, p.beta)


def test_aggregate_given_symmetric_errors_then_average_is_truth_and_mse_is_squared_error(studies):
    """Given estimates at truth +/- 0.1, then averages equal the truth, MSE is 0.01 and the standard
    error uses the sample deviation"""

    # Arrange
    cfg = studies.small
    truth = _truth(cfg)
    replications = [sut.Replication(i, tuple(v + (0.1 if i % 2 else -0.1) for v in truth), studies.interval_values)
                    for i in range(cfg.replications)]
    # Act
    result = sut.aggregate(cfg, replications)
    # Assert
    for name, value in zip(ESTIMATE_COLUMNS, truth):
        assert result.estimates[name].average == pytest.approx(value, rel=1e-12)
        assert result.estimates[name].mse == pytest.approx(0.01, rel=1e-9)
        assert result.estimates[name].standard_error == pytest.approx(0.1 * math.sqrt(100.0 / 99.0) / 10.0,
                                                                      rel=1e-9)
    assert result.intervals == pytest.approx(dict(zip(INTERVAL_COLUMNS, studies.interval_values)))
    assert result.convergence_failures == 0 and result.included == 100


def test_aggregate_given_shuffled_replications_then_result_is_order_independent(studies):
    """Given the same replications in another order, then the report is identical"""

    # Arrange
    cfg = studies.small
    replications = [sut.Replication(i, tuple(float(i) * (k + 1) for k in range(7)), studies.interval_values)
                    for i in range(cfg.replications)]
    # Act
    forward = sut.aggregate(cfg, replications)
    backward = sut.aggregate(cfg, list(reversed(replications)))
    # Assert
    assert forward == backward


@pytest.mark.parametrize("failures, raises", [(20, False), (21, True)])
def test_aggregate_given_failures_then_aborts_only_above_twenty_percent(studies, failures, raises):
    """Given excluded replications, then the study aborts when more than 20% failed"""

    # Arrange
    cfg = studies.small
    truth = _truth(cfg)
    replications = [sut.Replication(i, reason="failed") if i < failures else
                    sut.Replication(i, truth, studies.interval_values) for i in range(cfg.replications)]
    # Act / Assert
    if raises:
        with pytest.raises(StudyAbortedError):
            sut.aggregate(cfg, replications)
    else:
        assert sut.aggregate(cfg, replications).convergence_failures == failures

# endregion

# region run_study(cfg, progress) / run_grid(configs, progress)


def test_run_study_given_seed_then_is_reproducible_and_reports_progress(studies):
    """Given a seeded configuration, then two runs give the same report and progress counts up to
    the number of replications"""

    # Arrange
    progress = MagicMock()
    # Act
    first = sut.run_study(studies.small, progress)
    second = sut.run_study(studies.small)
    # Assert
    assert first == second
    assert progress.call_count == 100
    progress.assert_called_with(100)
    assert first.included + first.convergence_failures == 100


def test_run_grid_given_two_configs_then_progress_is_cumulative(studies):
    """Given two cells, then progress counts across the whole grid"""

    # Arrange
    progress = MagicMock()
    configs = [studies.small, replace(studies.small, n=40)]

    def fake_study(cfg, cell_progress):
        cell_progress(cfg.replications)
        return cfg.n

    # Act
    with patch.object(sut, "run_study", side_effect=fake_study):
        result = sut.run_grid(configs, progress)
    # Assert
    assert result == [30, 40]
    assert progress.call_args_list == [call(100), call(200)]


@pytest.mark.slow
def test_run_study_given_two_workers_then_matches_single_worker(studies):
    """Given two worker processes, then the report equals the single-worker one"""

    # Act
    single = sut.run_study(studies.small)
    parallel = sut.run_study(replace(studies.small, workers=2))
    # Assert
    assert single.estimates == parallel.estimates
    assert single.intervals == parallel.intervals

# endregion

# region scenario_configs(scenario, base)


def test_scenario_configs_given_sizes_then_sweeps_n(studies):
    """Given the sizes scenario, then n runs over 10, 20, 30, 50 at (0.75, 0.75)"""

    # Act
    result = sut.scenario_configs(Scenario.SIZES, replace(studies.small, true_params=Params(2.0, 2.0)))
    # Assert
    assert [cfg.n for cfg in result] == [10, 20, 30, 50]
    assert all(cfg.true_params == Params(0.75, 0.75) for cfg in result)
    assert all(cfg.replications == 100 for cfg in result)


def test_scenario_configs_given_params_then_runs_four_pairs_at_twenty(studies):
    """Given the params scenario, then four parameter pairs run with n = 20"""

    # Act
    result = sut.scenario_configs(Scenario.PARAMS, studies.small)
    # Assert
    assert [(cfg.true_params.alpha, cfg.true_params.beta) for cfg in result] == [(0.5, 0.75), (0.5, 1.5),
                                                                                 (1.5, 0.5), (2.5, 2.5)]
    assert {cfg.n for cfg in result} == {20}


def test_scenario_configs_given_single_then_returns_base(studies):
    """Given the single scenario, then the base configuration is the only cell"""

    assert sut.scenario_configs(Scenario.SINGLE, studies.small) == [studies.small]

# endregion

# region estimates_frame(reports) / intervals_frame(reports)


def test_estimates_and_intervals_frames_given_report_then_have_table_layout(studies):
    """Given one report, then the estimates table has an average and an mse row and the interval
    table one row"""

    # Arrange
    cfg = studies.small
    report = sut.aggregate(cfg, [sut.Replication(i, _truth(cfg), studies.interval_values)
                                 for i in range(cfg.replications)])
    # Act
    estimates = sut.estimates_frame([report])
    intervals = sut.intervals_frame([report])
    # Assert
    assert list(estimates["statistic"]) == ["average", "mse"]
    assert list(estimates.columns[-7:]) == list(ESTIMATE_COLUMNS)
    assert estimates.loc[1, "alpha_ml"] == pytest.approx(0.0)
    assert len(intervals) == 1
    assert intervals.loc[0, "acl_beta"] == pytest.approx(0.3)

# endregion

# region estimator quality across sample sizes


@pytest.mark.slow
@pytest.mark.parametrize("name", ["alpha_ml", "beta_ml"])
def test_run_grid_given_size_sweep_then_mse_and_bias_fall_with_n(size_sweep, name):
    """Given n = 10 and n = 50 at (0.75, 0.75), then both the MSE and the absolute bias are smaller at 50"""

    # Arrange
    small, large = size_sweep[10].estimates[name], size_sweep[50].estimates[name]
    # Act
    bias_small, bias_large = abs(small.average - 0.75), abs(large.average - 0.75)
    # Assert
    assert large.mse < small.mse
    assert bias_large < bias_small


@pytest.mark.slow
def test_run_grid_given_size_sweep_then_interval_lengths_decrease(size_sweep):
    """Given n over 10, 20, 30, 50, then both average interval lengths strictly decrease"""

    for column in ("acl_alpha", "acl_beta"):
        lengths = [size_sweep[n].intervals[column] for n in (10, 20, 30, 50)]
        assert all(later < earlier for earlier, later in zip(lengths, lengths[1:])), column


@pytest.mark.slow
@pytest.mark.parametrize("n", [10, 20, 30, 50])
def test_run_grid_given_informative_prior_then_bayes_mse_does_not_exceed_ml(size_sweep, n):
    """Given the prior elicited at the truth, then the Lindley MSE is at most the ML MSE for both parameters"""

    estimates = size_sweep[n].estimates
    assert estimates["alpha_bl"].mse <= estimates["alpha_ml"].mse
    assert estimates["beta_bl"].mse <= estimates["beta_ml"].mse

# endregion

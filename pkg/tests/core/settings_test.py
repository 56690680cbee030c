"""Unit tests for the core.settings file"""

from unittest.mock import patch, mock_open

import power_maxwell.core.settings as sut
from tests.core.conftest import CoreTestsFixture as Fixture

# region load(path)


@patch("builtins.open", new_callable=mock_open, read_data=Fixture.settings_content)
def test_load_given_partial_file_then_missing_keys_keep_defaults(open_file_mock):
    """Given a settings file with only some keys, then those are overridden and the rest
    keep their defaults"""

    # Arrange
    settings = sut.Settings.__new__(sut.Settings)
    # Act
    settings.load("settings.json")
    # Assert
    assert settings.language == "es"
    assert settings.seed == 7
    assert settings.replications == 300
    assert settings.level == 0.95
    assert settings.output_dir == "pmad-output"


def test_settings_given_shipped_file_then_loads_study_defaults():
    """Given the settings.json shipped with the package, then the study defaults are loaded"""

    # Act
    settings = sut.Settings()
    # Assert
    assert settings.seed == 20190101
    assert settings.replications == 5000
    assert settings.prior_variance == 0.5
    assert settings.t_eval == 1.0

# endregion

"""Unit tests for the reference.errata file"""

import logging
from unittest.mock import patch

import power_maxwell.reference.errata as sut

# region ERRATA


def test_errata_given_ledger_then_topics_are_unique_and_complete():
    """Given the ledger, then every entry fills its four fields and topics do not repeat"""

    # Act
    topics = [erratum.topic for erratum in sut.ERRATA]
    # Assert
    assert len(topics) == len(set(topics))
    assert all(erratum.printed and erratum.implemented and erratum.resolution for erratum in sut.ERRATA)

# endregion

# region log_errata(errata) / errata_records(errata)


@patch.object(logging, "log")
def test_log_errata_given_entries_then_logs_title_and_one_line_each(logging_mock):
    """Given two entries, then logs the title followed by one indented line per entry"""

    # Arrange
    errata = sut.ERRATA[:2]
    # Act
    sut.log_errata(errata)
    # Assert
    messages = [logged.args[1] for logged in logging_mock.call_args_list]
    assert messages[0] == sut.literals.get("ref_errata_title")
    assert len(messages) == 3
    assert messages[1].startswith(f"\t{errata[0].topic}:")


def test_errata_records_given_ledger_then_returns_dicts():
    """Given the ledger, then each record holds topic, printed, implemented and resolution"""

    # Act
    result = sut.errata_records()
    # Assert
    assert len(result) == len(sut.ERRATA)
    assert set(result[0]) == {"topic", "printed", "implemented", "resolution"}

# endregion

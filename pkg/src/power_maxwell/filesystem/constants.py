"""Defines constants for the module."""

# Significant digits of every number written to reports and tables.
SIGNIFICANT_DIGITS = 10
COMMENT_PREFIX = "#"


class FileNames(object):
    """Defines constants for file names.

    Attributes:
        REPORT: JSON report with the run manifest and results.
        ECDF: Empirical against fitted distribution function.
        QQ: Theoretical against empirical quantiles.
        ESTIMATES: Point estimates table.
        INTERVALS: Confidence intervals table.
        GOF: Ranked goodness-of-fit table.
        SHAPE_TABLE: Shape measures by parameter pair.
    """

    REPORT = "report.json"
    ECDF = "ecdf.csv"
    QQ = "qq.csv"
    ESTIMATES = "table2.csv"
    INTERVALS = "table3.csv"
    GOF = "gof.csv"
    SHAPE_TABLE = "shape_table.csv"

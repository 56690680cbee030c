""" Reproduces the published shape table and logs the errata ledger """

import logging

import power_maxwell.filesystem.writers as writers
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution.literals import Literals as DistributionLiterals
from power_maxwell.distribution.moments import shape_table
from power_maxwell.filesystem.constants import FileNames
from power_maxwell.reference.errata import log_errata
from power_maxwell.reference.published import shape_rows, shape_table_differences
from power_maxwell.scripts.constants import EXIT_SUCCESS
from power_maxwell.scripts.script_common import RunManifest, write_report

literals = LiteralsCore([DistributionLiterals])


def main(manifest: RunManifest) -> int:
    logging.info(literals.get("dist_shape_table_title"))
    computed = shape_table(shape_rows())
    differences = shape_table_differences(computed)
    log_errata()

    writers.write_frame(manifest.output_path(FileNames.SHAPE_TABLE), differences)
    off = differences[differences["checked"] & ~differences["within"]]
    write_report(manifest, {"computed": computed.to_dict("records"), "checked": int(differences["checked"].sum()),
                            "outside_tolerance": off.to_dict("records")})
    return EXIT_SUCCESS

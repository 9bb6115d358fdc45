"""
This vequil extension writes the JSON run report
"""

from vequil.hookregistry import after
from vequil.extensionregistry import extension
from vequil.terrain import world
from vequil.utils import console_write as write
from vequil import report


@extension
class JSONReportWriter(object):
    """
    JSON report writer vequil extension.

    ``--report=<path>`` writes the report to a file, ``--json`` to stdout.
    """

    OPTIONS = [("--report=<path>", "write the JSON run report to the given file")]
    LOAD_IF = staticmethod(lambda config: bool(config.get("report")) or bool(config.get("json")))
    LOAD_PRIORITY = 60

    def __init__(self):
        after.all(self.json_report_writer_after_all)

    def json_report_writer_after_all(self, problems, marker):  # pylint: disable=unused-argument
        data = report.build_report(problems, timing=bool(world.config.get("timing")))
        if world.config.get("report"):
            report.write_report(data, world.config.report)
        if world.config.get("json"):
            write(report.dumps(data))

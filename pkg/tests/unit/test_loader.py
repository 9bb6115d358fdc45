"""
vequil
~~~~~~

Exact verification toolkit for perturbed weak vector equilibrium problems
"""

import pytest

from vequil.loader import load_extensions


def test_load_bundled_extensions(extensionregistry):
    """
    Test that loading the bundled extensions registers them again after a reset
    """
    # when
    modules = load_extensions()

    # then
    assert [m.__name__ for m in modules] == [
        "vequil.extensions.endreport_writer",
        "vequil.extensions.formatters.text",
        "vequil.extensions.json_report_writer",
        "vequil.extensions.syslog_writer",
        "vequil.extensions.time_recorder",
    ]
    assert sorted(e.__name__ for e in extensionregistry.extensions) == [
        "EndreportWriter",
        "JSONReportWriter",
        "SyslogWriter",
        "TextOutputFormatter",
        "TimeRecorder",
    ]

    # when loading twice
    load_extensions()

    # then
    assert len(extensionregistry.extensions) == 5


def test_load_unknown_package():
    with pytest.raises(ImportError):
        load_extensions("vequil.no_such_extensions")

from logging import Logger
from typing import Any, Dict, Optional

from src.analysis.report import Report
from src.analysis.workbench import Workbench
from src.config.settings import config
from src.utils.exceptions import KernelSplitError
from src.utils.logger import logger


def init(search_timeout: Optional[float] = None) -> tuple[Logger, Workbench]:
    log: Logger = logger
    try:
        log.info("Starting kernelsplit workbench")
        if not config.validate():
            raise KernelSplitError("Invalid configuration; check the KERNELSPLIT_* environment variables")
        workbench = Workbench(search_timeout=search_timeout)
    except KernelSplitError as e:
        log.error(f"Failed to initialize workbench: {e}", exc_info=True)
        raise e
    except Exception as e:
        log.error(f"Unexpected error initializing workbench: {e}", exc_info=True)
        raise e
    return log, workbench


def assert_verdicts(report: Report, expected: Dict[str, Any]) -> None:
    for key, value in expected.items():
        actual = report.verdicts.get(key)
        assert actual == value, f"Verdict does not match expected value. command: {report.command} {report.arguments}, key: {key}, expected: {value}, actual: {actual}"


def assert_report_round_trip(report: Report) -> None:
    again = Report.from_json(report.to_json())
    assert again.to_dict() == report.to_dict(), f"Report does not survive a JSON round trip. command: {report.command}"

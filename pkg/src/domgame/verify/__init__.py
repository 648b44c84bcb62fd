from .report import CheckReport, dump_reports, is_hypothesis  # noqa: F401
from . import checks, suites  # noqa: F401

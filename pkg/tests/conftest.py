import sys

from hypothesis import HealthCheck, settings

# deep recursions in the plain reference solver
sys.setrecursionlimit(200_000)

# solver calls inside @given bodies blow the default deadline on slow runners
settings.register_profile(
    "solver",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("solver")

# acceptance criterion verdict lines, printed after the run summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)

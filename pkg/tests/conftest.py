"""Shared pytest wiring: collects acceptance-criterion result lines and
prints them in the terminal summary, where pytest capture cannot swallow
them."""

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)

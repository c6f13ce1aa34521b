collected_acceptance_lines = []


def pytest_terminal_summary(terminalreporter):
    if collected_acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in collected_acceptance_lines:
            terminalreporter.write_line(line)

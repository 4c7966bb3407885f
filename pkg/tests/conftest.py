_ACCEPTANCE: list[tuple[str, str, bool, str]] = []


def record(criterion: str, description: str, ok: bool, detail: str = "") -> None:
    _ACCEPTANCE.append((criterion, description, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, description, ok, detail in sorted(_ACCEPTANCE):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {criterion} {description} ({detail})")

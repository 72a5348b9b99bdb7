import pytest

_ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


class _Criterion:
    def __init__(self, number: int, title: str):
        self.number = number
        self.title = title
        self.failures: list[str] = []

    def check(self, ok: bool, detail: str = "") -> None:
        if not ok:
            self.failures.append(detail)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc is not None and not isinstance(exc, AssertionError):
            self.failures.append(f"{exc_type.__name__}: {exc}")
        ok = not self.failures
        _ACCEPTANCE[self.number] = (self.title, ok, "; ".join(self.failures)[:300])
        line = f"criterion {self.number:2d} {'PASS' if ok else 'FAIL'}: {self.title}"
        print(line)
        if not ok:
            pytest.fail(f"{line}\n" + "\n".join(self.failures), pytrace=False)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        title, ok, detail = _ACCEPTANCE[n]
        tail = f"  [{detail}]" if detail else ""
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}: {title}{tail}")

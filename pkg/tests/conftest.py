import pytest

from reslab.algebra import field_of_order, make_field

_CRITERIA: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record a pass/fail line for the acceptance summary."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        _CRITERIA.append((name, ok, detail))
        print(f"[{'PASS' if ok else 'FAIL'}] {name} {detail}")
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture(params=[2, 3, 4, 5, 7, 8, 9], ids=lambda q: f"GF{q}")
def small_field(request):
    return field_of_order(request.param)


@pytest.fixture
def gf3():
    return make_field(3)


@pytest.fixture
def gf4():
    return make_field(2, 2)

import numpy as np
import pytest

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria of the build")


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion."""

    def record(label: str, ok: bool, detail: str = ""):
        _ACCEPTANCE.append((label, bool(ok), detail))
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_state(rng, dim=4):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_hermitian(rng, n):
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (x + x.conj().T) / 2

import pytest

from strsearch import _backend


def _available_backends() -> list[str]:
    names = ["py"]
    if _backend.has_native():
        names.append("c")
    return names


@pytest.fixture(params=_available_backends())
def backend(request):
    """Run a test once per available kernel backend."""
    return request.param


def pytest_report_header(config):
    native = "built" if _backend.has_native() else "NOT built (pure-Python only)"
    return f"strsearch native kernel: {native}"

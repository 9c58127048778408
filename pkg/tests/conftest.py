import time

import pytest

from ccgrowth.coxeter import build_affine_group
from ccgrowth.vab import build_klein_bottle, build_sign_flip_group

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}
SUITE_LIMIT_SECONDS = 300
_session_start = time.perf_counter()


@pytest.fixture(scope="session")
def a2():
    return build_affine_group("A", 2)


@pytest.fixture(scope="session")
def b2():
    return build_affine_group("B", 2)


@pytest.fixture(scope="session")
def g2():
    return build_affine_group("G", 2)


@pytest.fixture(scope="session")
def klein():
    return build_klein_bottle()


@pytest.fixture(scope="session")
def signflip():
    return {d: build_sign_flip_group(d) for d in (1, 2, 3)}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, msg = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {msg}")
    elapsed = time.perf_counter() - _session_start
    ok = elapsed < SUITE_LIMIT_SECONDS
    terminalreporter.write_line(
        f"full suite runtime: {'PASS' if ok else 'FAIL'}  {elapsed:.1f}s (limit {SUITE_LIMIT_SECONDS}s)")

import pytest

from gelfand.field import build_field
from gelfand.pipeline import DEFAULT_GL_GRID, DEFAULT_O_GRID, run_verify


@pytest.fixture(scope="session")
def f2():
    return build_field(2, 1)


@pytest.fixture(scope="session")
def f3():
    return build_field(3, 1)


@pytest.fixture(scope="session")
def f4():
    return build_field(2, 2)


@pytest.fixture(scope="session")
def f5():
    return build_field(5, 1)


# Full pipeline runs for the acceptance grids, shared across criteria so the
# big groups are enumerated only once per session.

@pytest.fixture(scope="session")
def gl_reports():
    return {(big, q): run_verify("gl", big - 1, q)
            for big, q in DEFAULT_GL_GRID}


@pytest.fixture(scope="session")
def o_reports():
    return {(big, q): run_verify("o", big - 1, q)
            for big, q in DEFAULT_O_GRID}

import pytest

from hessideals.polytext import parse_polynomial

XYZ = ("x", "y", "z")

CUSP_QUARTIC = "x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x*y*z*(x+y+z)"
SIX_LINES = "(x^2-y^2)*(y^2-z^2)*(x^2-z^2)"
FERMAT_SEXTIC = "x^6+y^6+z^6"
CONIC_SEXTIC = "(x^2+y^2)^3+(y^3+z^3)^2"
OKA_SEXTIC = (
    "27*(x+y)^3*(x+y-z)^2*(x+y+2*z)-27*(x+y)^2*(x+y-z)^2*((x-y)^2-z^2)"
    "+9*((x+y)^2-z^2)*((x-y)^2-z^2)^2-((x-y)^2-z^2)^3"
)


def xyz(text):
    return parse_polynomial(text, XYZ)


@pytest.fixture(scope="session")
def cusp_quartic():
    return xyz(CUSP_QUARTIC)


@pytest.fixture(scope="session")
def six_lines():
    return xyz(SIX_LINES)


@pytest.fixture(scope="session")
def fermat_sextic():
    return xyz(FERMAT_SEXTIC)


_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(_ACCEPTANCE_KEY, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)

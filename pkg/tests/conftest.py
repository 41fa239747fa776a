import pytest

from structgen.forge import SynthConfig, synthesize
from structgen.grammar import shipped_grammar
from structgen.qa import build_cc_cp, build_rc_pp

SMALL_DISAMB = (80, 20, 20, 40)


@pytest.fixture(scope="session")
def cogs():
    return shipped_grammar("cogs")


@pytest.fixture(scope="session")
def cc_cp_grammar():
    return shipped_grammar("cc_cp")


@pytest.fixture(scope="session")
def rc_pp_grammar():
    return shipped_grammar("rc_pp")


@pytest.fixture(scope="session")
def small_synth(cogs):
    return synthesize(SynthConfig(seed=3, train=1200, dev=60, test=60, gen_per_type=6), cogs)


@pytest.fixture(scope="session")
def small_cc_cp():
    return build_cc_cp(counts=SMALL_DISAMB, seed=1)


@pytest.fixture(scope="session")
def small_rc_pp():
    return build_rc_pp(counts=SMALL_DISAMB, seed=1)


ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def acceptance_log(request):
    """Record one verdict line per acceptance criterion; printed in the terminal summary."""
    log = request.config.stash.setdefault(ACCEPTANCE, {})

    def record(number: int, passed: bool, detail: str) -> None:
        log[number] = f"ACCEPTANCE {number:2d} {'PASS' if passed else 'FAIL'}  {detail}"
        print(log[number])
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.stash.get(ACCEPTANCE, {})
    if log:
        terminalreporter.section("acceptance criteria")
        for n in sorted(log):
            terminalreporter.write_line(log[n])

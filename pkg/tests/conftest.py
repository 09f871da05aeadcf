import os

import pytest
from hypothesis import settings, strategies as st

from schubcalc.perm import Permutation

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def perms(max_n=6):
    return st.integers(0, max_n).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def P(text):
    return Permutation.parse(text)


@pytest.fixture(autouse=True)
def _no_disk_cache(monkeypatch, tmp_path):
    # the CLI attaches a disk cache; keep it out of the working tree
    monkeypatch.setenv("SCHUBERT_CACHE_DIR", str(tmp_path / "cache"))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

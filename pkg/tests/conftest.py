from pathlib import Path

import hypothesis
import pytest

from causalstates import BenchmarkConfig, run_benchmark, store_from_table, write_csv

hypothesis.settings.register_profile("fast", max_examples=25, deadline=None)
hypothesis.settings.load_profile("fast")

ARTIFACTS = Path(__file__).resolve().parent.parent / "artifacts"

# Golden count table: every word of length <= 4 from the published 10^4-step
# run of the even process, 9996 windows at each length.
TABLE1 = {
    "0": 3309, "1": 6687,
    "00": 1654, "01": 1655, "10": 1655, "11": 5032,
    "000": 836, "001": 818, "010": 0, "011": 1655,
    "100": 818, "101": 837, "110": 1654, "111": 3378,
    "0000": 414, "0001": 422, "0010": 0, "0011": 818,
    "0100": 0, "0101": 0, "0110": 814, "0111": 841,
    "1000": 422, "1001": 396, "1010": 0, "1011": 837,
    "1100": 818, "1101": 836, "1110": 841, "1111": 2537,
}

# Final suffix membership of the four precausal states from the same run,
# and of the two recurrent states left after determinization.
GOLDEN_PARTITION = {
    "A": {"", "11"},
    "B": {"1", "111"},
    "C": {"0", "00", "10", "000", "100", "110", "011"},
    "D": {"01", "001", "101"},
}


def words(strings):
    return frozenset(tuple(int(c) for c in s) for s in strings)


@pytest.fixture(scope="session")
def table1_store():
    return store_from_table(TABLE1, k=2, lmax=3)


@pytest.fixture(scope="session")
def even_grid_rows():
    """Benchmark grid backing the error-scaling and state-count criteria.

    Written to artifacts/ so the plotting component can be pointed at a real
    CSV produced by this suite.
    """
    cfg = BenchmarkConfig(
        process="even",
        grid_n=(100, 1000, 10_000, 100_000, 1_000_000),
        grid_lmax=(1, 2, 3, 4, 5, 6),
        reps=30,
        alpha=1e-3,
        seed=0,
    )
    rows = run_benchmark(cfg)
    ARTIFACTS.mkdir(exist_ok=True)
    with open(ARTIFACTS / "benchmark_even.csv", "w") as fh:
        write_csv(rows, fh)
    return cfg, rows

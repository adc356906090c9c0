import numpy as np
import pytest

from specjoin.power_graph import power_graph_direct
from specjoin.spectra import laplacian_spectrum


class _OracleCache:
    """Memoized dense-oracle spectra of P(Z_n), shared across test modules."""

    def __init__(self):
        self._memo: dict[int, np.ndarray] = {}

    def __call__(self, n: int) -> np.ndarray:
        if n not in self._memo:
            self._memo[n] = laplacian_spectrum(power_graph_direct(n))
        return self._memo[n]


@pytest.fixture(scope="session")
def power_oracle():
    return _OracleCache()


@pytest.fixture(scope="session", autouse=True)
def warm_jacobi():
    # trigger the JIT once so timed tests measure the algorithm, not compilation
    laplacian_spectrum(power_graph_direct(5))

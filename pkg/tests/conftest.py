import numpy as np
import pytest

from circone.circulant import idft
from circone.lcsi import AbcTriple

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def random_hermitian(rng, d, scale=1.0):
    """Random ``x`` with ``x = conj(reverse(x))``."""
    x = scale * (rng.normal(size=d) + 1j * rng.normal(size=d))
    x = (x + np.conj(x[(-np.arange(d)) % d])) / 2
    return x


def from_eigenvalues(lam):
    """Circulant first row with eigenvalues ``lam`` (mode order of the DFT)."""
    lam = np.asarray(lam, dtype=complex)
    return idft(lam) / np.sqrt(lam.size)


def random_triple(rng, d, negative_chance=0.25):
    """Hermitian-valid triple with PSD and PPT holding or failing about evenly."""
    lam_b = rng.exponential(size=d)
    if rng.random() < negative_chance:
        lam_b[rng.integers(d)] *= -1
    b = from_eigenvalues(lam_b)
    a0 = b[0].real
    lam_c = rng.exponential(size=d)
    if rng.random() < negative_chance:
        lam_c[rng.integers(d)] *= -1
    lam_c *= a0 / lam_c.mean()
    c = from_eigenvalues(lam_c)
    a = np.empty(d)
    a[0] = a0
    for k in range(1, d):
        a[k] = max(abs(b[k]), abs(c[k])) * np.exp(rng.normal(0, 0.4)) + 1e-3
    if rng.random() < negative_chance / 2:
        a[rng.integers(1, d)] *= -1
    b[0] = c[0] = a0
    return AbcTriple(a, b, c)


def random_symmetric(rng, d, low=0.0, high=1.0):
    a = rng.uniform(low, high, size=d)
    return (a + a[(-np.arange(d)) % d]) / 2

import numpy as np
import pytest

from petshare.cipher import CipherSuite, SecretKey

ACCEPTANCE_LINES: list[str] = []


class RedundantSuite(CipherSuite):
    """8-bit key whose last (least significant) bit is ignored."""

    id = 0xFE
    name = "redundant"
    key_len = 1

    def keystream(self, key: SecretKey, length: int) -> bytes:
        return bytes([key.data[0] & 0xFE]) * length


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def redundant_suite():
    return RedundantSuite()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

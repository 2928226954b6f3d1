import numpy as np
import pytest

from petshare.cipher import (
    AES_SBOX,
    STREAM256,
    TEST_KEYSTREAM,
    TOY_OTP,
    SecretKey,
    SystemRandomSource,
    ToyKeystream,
    ToyOTP,
    check_non_redundant,
    dec,
    enc,
    keygen,
    suite_by_id,
    suite_by_name,
)
from petshare.errors import SpaceTooLarge
from petshare.gf import GF4, GF256

SUITES = [TOY_OTP, TEST_KEYSTREAM, STREAM256]

# RFC 8439 appendix A.1, test vector 1: zero key, zero nonce, block counter 0.
CHACHA20_ZERO_BLOCK = bytes.fromhex(
    "76b8e0ada0f13d90405d6ae55386bd28bdd219b8a08ded1aa836efcc8b770dc7"
    "da41597c5157488d7724e03fb8d84a376a43b8f41518a11cc387b669b2ee6586"
)


def test_suite_registry():
    assert [s.id for s in SUITES] == [1, 2, 3]
    assert suite_by_id(2) is TEST_KEYSTREAM
    assert suite_by_name("stream256") is STREAM256
    with pytest.raises(ValueError):
        suite_by_id(0x42)


@pytest.mark.parametrize("suite", SUITES, ids=lambda s: s.name)
def test_keygen_length_and_determinism(suite):
    k1 = keygen(suite, np.random.default_rng(0))
    k2 = keygen(suite, np.random.default_rng(0))
    assert k1 == k2 and len(k1) == suite.key_len
    assert len(keygen(suite, SystemRandomSource())) == suite.key_len


def test_distinct_seeds_pinned():
    k0 = keygen(TEST_KEYSTREAM, np.random.default_rng(0))
    k1 = keygen(TEST_KEYSTREAM, np.random.default_rng(1))
    assert k0.data.hex() == "5f82c2d9cfeb0fa321d7d982f8bd1045"
    assert k1.data.hex() == "ffe42279f3bd068366a852c1bb9651f3"
    assert k0 != k1


@pytest.mark.parametrize("suite", SUITES, ids=lambda s: s.name)
def test_empty_message(suite, rng):
    k = suite.keygen(rng)
    assert enc(suite, k, b"") == b"" and dec(suite, k, b"") == b""


def test_toy_otp_zero():
    k = SecretKey(bytes(16))
    assert enc(TOY_OTP, k, bytes(40)) == bytes(40)


@pytest.mark.parametrize("suite", SUITES, ids=lambda s: s.name)
def test_length_preservation_and_round_trip(suite, rng):
    lengths = list(rng.integers(0, 4097, size=40)) + [0, 1, 4096]
    for n in lengths:
        k = suite.keygen(rng)
        m = rng.bytes(int(n))
        c = enc(suite, k, m)
        assert len(c) == n
        assert dec(suite, k, c) == m


def test_keystream_round_trip_100(rng):
    for _ in range(100):
        k = TEST_KEYSTREAM.keygen(rng)
        m = rng.bytes(int(rng.integers(0, 300)))
        assert dec(TEST_KEYSTREAM, k, enc(TEST_KEYSTREAM, k, m)) == m


def test_wrong_key_pinned_trial():
    r = np.random.default_rng(77)
    k, k2 = TEST_KEYSTREAM.keygen(r), TEST_KEYSTREAM.keygen(r)
    m = r.bytes(64)
    assert k != k2
    assert dec(TEST_KEYSTREAM, k2, enc(TEST_KEYSTREAM, k, m)) != m


def test_stream256_known_answer():
    assert STREAM256.keystream(SecretKey(bytes(32)), 64) == CHACHA20_ZERO_BLOCK


def test_test_keystream_pinned():
    ks = TEST_KEYSTREAM.keystream(SecretKey(bytes(16)), 16)
    assert ks.hex() == "9bd8e40864baf402b2c5a89c0b2bd63d"
    # counter mode: a longer request extends, never rewrites, the prefix
    assert TEST_KEYSTREAM.keystream(SecretKey(bytes(16)), 100)[:16] == ks


@pytest.mark.parametrize("suite", [TEST_KEYSTREAM, STREAM256], ids=lambda s: s.name)
def test_keystream_byte_frequencies(suite):
    n = 1 << 20
    ks = np.frombuffer(suite.keystream(SecretKey(bytes(range(suite.key_len))), n), dtype=np.uint8)
    counts = np.bincount(ks, minlength=256)
    mean = n / 256
    sigma = np.sqrt(n * (1 / 256) * (255 / 256))
    assert np.all(np.abs(counts - mean) < 5 * sigma)


def test_wrong_key_length():
    with pytest.raises(ValueError):
        enc(STREAM256, SecretKey(bytes(16)), b"x")


def test_key_symbol_view(rng):
    k = STREAM256.keygen(rng)
    assert len(k.symbols(GF4)) == 128 and len(k.symbols(GF256)) == 32
    assert SecretKey.from_symbols(k.symbols(GF4)) == k
    assert STREAM256.key_symbols(GF4) == 128


def test_aes_sbox_is_pinned_permutation():
    assert sorted(AES_SBOX) == list(range(256))
    assert (AES_SBOX[0x00], AES_SBOX[0x01], AES_SBOX[0x53], AES_SBOX[0xFF]) == (0x63, 0x7C, 0xED, 0x16)


def test_non_redundant_toy_otp():
    assert check_non_redundant(ToyOTP(key_len=1)) is True


def test_non_redundant_counterexample(redundant_suite):
    assert check_non_redundant(redundant_suite) is False


def test_non_redundant_toy_keystream_pinned():
    assert check_non_redundant(ToyKeystream()) is True


def test_non_redundant_two_byte_messages():
    assert check_non_redundant(ToyOTP(key_len=1), msg_len=2) is True


def test_non_redundant_guard():
    with pytest.raises(SpaceTooLarge):
        check_non_redundant(TOY_OTP)
    with pytest.raises(SpaceTooLarge):
        check_non_redundant(ToyOTP(1), msg_len=3)


def test_flip_bit_msb_first():
    assert SecretKey(b"\x00\x00").flip_bit(0).data == b"\x80\x00"
    assert SecretKey(b"\x00\x00").flip_bit(15).data == b"\x00\x01"

"""Length-preserving stream encryption suites.

Every suite XORs the message with a keystream derived from the key, so
``len(enc(k, m)) == len(m)`` and ``dec`` is the same operation as
``enc``. Encryption is deterministic: no nonce is mixed in, so a key
must encrypt exactly one message.

Randomness is an injected capability: any object with a
``bytes(n) -> bytes`` method. ``numpy.random.Generator`` satisfies this
(seeded, for tests), as does :class:`SystemRandomSource` (OS entropy).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Protocol

import numpy as np
from cryptography.hazmat.primitives.ciphers import Cipher, algorithms

from .errors import SpaceTooLarge
from .gf import GF256, FieldSpec
from .poly import SymbolVector

__all__ = [
    "RandomSource",
    "SystemRandomSource",
    "SecretKey",
    "CipherSuite",
    "ToyOTP",
    "TestKeystream",
    "Stream256",
    "ToyKeystream",
    "AES_SBOX",
    "TOY_OTP",
    "TEST_KEYSTREAM",
    "STREAM256",
    "suite_by_id",
    "suite_by_name",
    "keygen",
    "enc",
    "dec",
    "check_non_redundant",
]


class RandomSource(Protocol):
    def bytes(self, length: int) -> bytes: ...


class SystemRandomSource:
    """Operating-system entropy."""

    def bytes(self, length: int) -> bytes:
        return os.urandom(length)


@dataclass(frozen=True)
class SecretKey:
    data: bytes

    def __len__(self) -> int:
        return len(self.data)

    def symbols(self, spec: FieldSpec) -> SymbolVector:
        return SymbolVector.from_bytes(self.data, spec)

    @classmethod
    def from_symbols(cls, vec: SymbolVector) -> "SecretKey":
        return cls(vec.to_bytes())

    def flip_bit(self, i: int) -> "SecretKey":
        """Key with bit ``i`` inverted; bit 0 is the MSB of the first byte."""
        buf = bytearray(self.data)
        buf[i // 8] ^= 0x80 >> (i % 8)
        return SecretKey(bytes(buf))


def _xor(data: bytes, stream: bytes) -> bytes:
    a = np.frombuffer(data, dtype=np.uint8)
    b = np.frombuffer(stream, dtype=np.uint8)
    return (a ^ b).tobytes()


class CipherSuite:
    """Base class: subclasses provide ``keystream(key, length)``."""

    id: int = 0
    name: str = ""
    key_len: int = 0

    def keygen(self, rng: RandomSource) -> SecretKey:
        data = bytes(rng.bytes(self.key_len))
        if len(data) != self.key_len:
            raise RuntimeError(f"random source returned {len(data)} of {self.key_len} bytes")
        return SecretKey(data)

    def keystream(self, key: SecretKey, length: int) -> bytes:
        raise NotImplementedError

    def _check_key(self, key: SecretKey) -> None:
        if len(key) != self.key_len:
            raise ValueError(f"{self.name} expects a {self.key_len}-byte key, got {len(key)}")

    def enc(self, key: SecretKey, message: bytes) -> bytes:
        self._check_key(key)
        if not message:
            return b""
        return _xor(bytes(message), self.keystream(key, len(message)))

    def dec(self, key: SecretKey, ciphertext: bytes) -> bytes:
        return self.enc(key, ciphertext)

    def key_symbols(self, spec: FieldSpec) -> int:
        return self.key_len * 8 // spec.m

    def __repr__(self) -> str:
        return f"{type(self).__name__}(id={self.id:#04x}, key_len={self.key_len})"


class ToyOTP(CipherSuite):
    """XOR with the key repeated to the message length.

    This is a true one-time pad only for messages no longer than the key;
    it exists for exhaustive checks, not for protecting anything.
    """

    id = 0x01
    name = "toy-otp"

    def __init__(self, key_len: int = 16) -> None:
        self.key_len = key_len

    def keystream(self, key: SecretKey, length: int) -> bytes:
        reps = -(-length // self.key_len)
        return (key.data * reps)[:length]


class TestKeystream(CipherSuite):
    """Philox-4x64 in counter mode, keyed by the 128-bit key.

    Reproducible bit-for-bit: ``random_raw`` is fixed by the Philox
    definition, independent of numpy's distribution code.
    """

    __test__ = False  # not a pytest class despite the name

    id = 0x02
    name = "test-keystream"
    key_len = 16

    def keystream(self, key: SecretKey, length: int) -> bytes:
        bitgen = np.random.Philox(key=int.from_bytes(key.data, "little"))
        words = bitgen.random_raw(-(-length // 8))
        return words.astype("<u8").tobytes()[:length]


class Stream256(CipherSuite):
    """ChaCha20 with a 256-bit key and an all-zero nonce."""

    id = 0x03
    name = "stream256"
    key_len = 32

    def keystream(self, key: SecretKey, length: int) -> bytes:
        return self._cipher(key).update(bytes(length))

    def enc(self, key: SecretKey, message: bytes) -> bytes:
        self._check_key(key)
        if not message:
            return b""
        return self._cipher(key).update(bytes(message))

    @staticmethod
    def _cipher(key: SecretKey):
        algo = algorithms.ChaCha20(key.data, bytes(16))
        return Cipher(algo, mode=None).encryptor()


def _aes_sbox() -> tuple[int, ...]:
    out = []
    for b in range(256):
        s = int(GF256.inv_table[b]) if b else 0
        x = s
        for _ in range(4):
            s = ((s << 1) | (s >> 7)) & 0xFF
            x ^= s
        out.append(x ^ 0x63)
    return tuple(out)


# Pinned permutation of 0..255 (the AES S-box, rebuilt from GF(256) inverses).
AES_SBOX = _aes_sbox()


class ToyKeystream(CipherSuite):
    """8-bit seed; keystream byte j is ``AES_SBOX[(seed + j) % 256]``."""

    id = 0xF0
    name = "toy-keystream"
    key_len = 1

    def keystream(self, key: SecretKey, length: int) -> bytes:
        seed = key.data[0]
        return bytes(AES_SBOX[(seed + j) & 0xFF] for j in range(length))


TOY_OTP = ToyOTP()
TEST_KEYSTREAM = TestKeystream()
STREAM256 = Stream256()

_SUITES = {s.id: s for s in (TOY_OTP, TEST_KEYSTREAM, STREAM256)}


def suite_by_id(suite_id: int) -> CipherSuite:
    try:
        return _SUITES[suite_id]
    except KeyError:
        raise ValueError(f"unknown cipher id {suite_id:#04x}") from None


def suite_by_name(name: str) -> CipherSuite:
    for s in _SUITES.values():
        if s.name == name:
            return s
    raise ValueError(f"unknown cipher suite {name!r}")


def keygen(suite: CipherSuite, rng: RandomSource) -> SecretKey:
    return suite.keygen(rng)


def enc(suite: CipherSuite, key: SecretKey, message: bytes) -> bytes:
    return suite.enc(key, message)


def dec(suite: CipherSuite, key: SecretKey, ciphertext: bytes) -> bytes:
    return suite.dec(key, ciphertext)


def check_non_redundant(suite: CipherSuite, msg_len: int = 1) -> bool:
    """Exhaustively decide whether every key bit matters.

    True iff for every key k and bit i some message m has
    ``dec(k with bit i flipped, enc(k, m)) != m``. Keys and messages are
    limited to 16 bits each.
    """
    key_bits = suite.key_len * 8
    if key_bits > 16 or msg_len * 8 > 16:
        raise SpaceTooLarge(f"{key_bits}-bit keys x {msg_len * 8}-bit messages")
    messages = [bytes(m) for m in itertools.product(range(256), repeat=msg_len)]
    for kb in itertools.product(range(256), repeat=suite.key_len):
        k = SecretKey(bytes(kb))
        for i in range(key_bits):
            flipped = k.flip_bit(i)
            if not any(suite.dec(flipped, suite.enc(k, m)) != m for m in messages):
                return False
    return True


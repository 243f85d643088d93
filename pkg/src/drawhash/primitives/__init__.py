"""Reference implementations of every primitive the kernels compute.

These are the correctness oracles: scalar, unconstrained, no draw-call
model anywhere.  Kernel outputs are always checked against this package.
md5/sha256/hmac/pbkdf2 delegate to hashlib (OpenSSL) on purpose, so that
side of the comparison is maximally independent of our own code.
"""

from dataclasses import dataclass

from .hashes import md5, sha256, hmac_sha256, pbkdf2_hmac_sha256
from .keccak import keccak_f1600, keccak_cn, keccak_256
from .aes import aes_round, cn_expand_key
from .scryptref import salsa20_8_core, scrypt
from .blake256 import blake256
from .groestl256 import groestl256
from .jh256 import jh256
from .skein256 import skein256
from .cryptonight import cn_slow_hash, cn_slow_hash_with_stats, CN_ITERATIONS, SCRATCHPAD_BYTES

DIGEST_SIZES = {
    "md5": 16,
    "sha256": 32,
    "keccak_cn": 200,
    "blake256": 32,
    "groestl256": 32,
    "jh256": 32,
    "skein256": 32,
    "cryptonight": 32,
}


@dataclass(frozen=True)
class Digest:
    alg: str
    data: bytes

    def __post_init__(self):
        expect = DIGEST_SIZES.get(self.alg)
        if expect is not None and len(self.data) != expect:
            raise ValueError("%s digest must be %d bytes, got %d" % (self.alg, expect, len(self.data)))

    def hex(self) -> str:
        return self.data.hex()


_PLAIN = {
    "md5": md5,
    "sha256": sha256,
    "keccak_cn": keccak_cn,
    "blake256": blake256,
    "groestl256": groestl256,
    "jh256": jh256,
    "skein256": skein256,
    "cryptonight": cn_slow_hash,
}


def compute(alg: str, data: bytes) -> Digest:
    """Uniform entry point for the single-input algorithms."""
    fn = _PLAIN.get(alg)
    if fn is None:
        raise ValueError("unknown or parameterized algorithm %r" % (alg,))
    return Digest(alg, fn(data))


__all__ = [
    "Digest",
    "DIGEST_SIZES",
    "compute",
    "md5",
    "sha256",
    "hmac_sha256",
    "pbkdf2_hmac_sha256",
    "keccak_f1600",
    "keccak_cn",
    "keccak_256",
    "aes_round",
    "cn_expand_key",
    "salsa20_8_core",
    "scrypt",
    "blake256",
    "groestl256",
    "jh256",
    "skein256",
    "cn_slow_hash",
    "cn_slow_hash_with_stats",
    "CN_ITERATIONS",
    "SCRATCHPAD_BYTES",
]

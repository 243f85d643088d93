"""Scrypt (ROMix over BlockMix-Salsa20/8) with PBKDF2-HMAC-SHA256 at both
ends.

Hand-rolled rather than hashlib.scrypt because the kernel side needs a
step-by-step reference to diff against; tests still compare this whole
function against OpenSSL's scrypt as a second, independent oracle.
"""

import struct

from .hashes import pbkdf2_hmac_sha256

MASK32 = 0xFFFFFFFF


def _rotl32(v: int, n: int) -> int:
    return ((v << n) | (v >> (32 - n))) & MASK32


def salsa20_8_words(x):
    """Salsa20/8 core on 16 little-endian words."""
    z = list(x)
    for _ in range(4):  # 8 rounds = 4 double rounds
        # column round
        z[4] ^= _rotl32((z[0] + z[12]) & MASK32, 7)
        z[8] ^= _rotl32((z[4] + z[0]) & MASK32, 9)
        z[12] ^= _rotl32((z[8] + z[4]) & MASK32, 13)
        z[0] ^= _rotl32((z[12] + z[8]) & MASK32, 18)
        z[9] ^= _rotl32((z[5] + z[1]) & MASK32, 7)
        z[13] ^= _rotl32((z[9] + z[5]) & MASK32, 9)
        z[1] ^= _rotl32((z[13] + z[9]) & MASK32, 13)
        z[5] ^= _rotl32((z[1] + z[13]) & MASK32, 18)
        z[14] ^= _rotl32((z[10] + z[6]) & MASK32, 7)
        z[2] ^= _rotl32((z[14] + z[10]) & MASK32, 9)
        z[6] ^= _rotl32((z[2] + z[14]) & MASK32, 13)
        z[10] ^= _rotl32((z[6] + z[2]) & MASK32, 18)
        z[3] ^= _rotl32((z[15] + z[11]) & MASK32, 7)
        z[7] ^= _rotl32((z[3] + z[15]) & MASK32, 9)
        z[11] ^= _rotl32((z[7] + z[3]) & MASK32, 13)
        z[15] ^= _rotl32((z[11] + z[7]) & MASK32, 18)
        # row round
        z[1] ^= _rotl32((z[0] + z[3]) & MASK32, 7)
        z[2] ^= _rotl32((z[1] + z[0]) & MASK32, 9)
        z[3] ^= _rotl32((z[2] + z[1]) & MASK32, 13)
        z[0] ^= _rotl32((z[3] + z[2]) & MASK32, 18)
        z[6] ^= _rotl32((z[5] + z[4]) & MASK32, 7)
        z[7] ^= _rotl32((z[6] + z[5]) & MASK32, 9)
        z[4] ^= _rotl32((z[7] + z[6]) & MASK32, 13)
        z[5] ^= _rotl32((z[4] + z[7]) & MASK32, 18)
        z[11] ^= _rotl32((z[10] + z[9]) & MASK32, 7)
        z[8] ^= _rotl32((z[11] + z[10]) & MASK32, 9)
        z[9] ^= _rotl32((z[8] + z[11]) & MASK32, 13)
        z[10] ^= _rotl32((z[9] + z[8]) & MASK32, 18)
        z[12] ^= _rotl32((z[15] + z[14]) & MASK32, 7)
        z[13] ^= _rotl32((z[12] + z[15]) & MASK32, 9)
        z[14] ^= _rotl32((z[13] + z[12]) & MASK32, 13)
        z[15] ^= _rotl32((z[14] + z[13]) & MASK32, 18)
    return [(zi + xi) & MASK32 for zi, xi in zip(z, x)]


def salsa20_8_core(block: bytes) -> bytes:
    if len(block) != 64:
        raise ValueError("salsa core works on 64 bytes")
    words = list(struct.unpack("<16I", block))
    return struct.pack("<16I", *salsa20_8_words(words))


def _blockmix(b_words, r):
    # b_words: 2r groups of 16 words
    x = b_words[16 * (2 * r - 1) :]
    out_even = []
    out_odd = []
    for i in range(2 * r):
        chunk = b_words[16 * i : 16 * i + 16]
        x = salsa20_8_words([a ^ b for a, b in zip(x, chunk)])
        if i % 2 == 0:
            out_even.extend(x)
        else:
            out_odd.extend(x)
    return out_even + out_odd


def _integerify(b_words, r):
    # first word of the last 64-byte block
    return b_words[16 * (2 * r - 1)]


def _romix(block: bytes, n: int, r: int) -> bytes:
    words = list(struct.unpack("<%dI" % (len(block) // 4), block))
    v = []
    x = words
    for _ in range(n):
        v.append(x)
        x = _blockmix(x, r)
    for _ in range(n):
        j = _integerify(x, r) % n
        x = _blockmix([a ^ b for a, b in zip(x, v[j])], r)
    return struct.pack("<%dI" % len(x), *x)


def scrypt(password: bytes, salt: bytes, n: int, r: int, p: int, dklen: int) -> bytes:
    if n < 2 or n & (n - 1):
        raise ValueError("N must be a power of two > 1")
    if r < 1 or p < 1:
        raise ValueError("r and p must be >= 1")
    if dklen < 1:
        raise ValueError("dklen must be >= 1")
    mflen = 128 * r
    blob = pbkdf2_hmac_sha256(password, salt, 1, p * mflen)
    mixed = b"".join(
        _romix(blob[i * mflen : (i + 1) * mflen], n, r) for i in range(p)
    )
    return pbkdf2_hmac_sha256(password, mixed, 1, dklen)

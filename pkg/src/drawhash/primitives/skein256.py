"""Skein-512-256: Threefish-512 in UBI chaining mode, 256-bit output.

The fourth memory-hard-hash finalizer.  The chain IV is derived from the
configuration block per the definition instead of pasting the published
constant; a test asserts the derived value against the known IV anyway.
"""

import struct

MASK64 = (1 << 64) - 1
_C240 = 0x1BD11BDAA9FC1A22

# Threefish-512 rotation constants (rounds mod 8 x 4 mixes), 1.3 schedule
_R = (
    (46, 36, 19, 37),
    (33, 27, 14, 42),
    (17, 49, 36, 39),
    (44, 9, 54, 56),
    (39, 30, 34, 24),
    (13, 50, 10, 17),
    (25, 29, 39, 43),
    (8, 35, 56, 22),
)
_PERM = (2, 1, 4, 7, 6, 5, 0, 3)

_T_CFG = 4
_T_MSG = 48
_T_OUT = 63


def _rotl(v, n):
    return ((v << n) | (v >> (64 - n))) & MASK64


def _threefish512(key, tweak, block):
    k = list(key) + [_C240 ^ key[0] ^ key[1] ^ key[2] ^ key[3] ^ key[4] ^ key[5] ^ key[6] ^ key[7]]
    t = [tweak[0], tweak[1], tweak[0] ^ tweak[1]]
    v = list(block)
    for d in range(72):
        if d % 4 == 0:
            s = d // 4
            for i in range(8):
                v[i] = (v[i] + k[(s + i) % 9]) & MASK64
            v[5] = (v[5] + t[s % 3]) & MASK64
            v[6] = (v[6] + t[(s + 1) % 3]) & MASK64
            v[7] = (v[7] + s) & MASK64
        rot = _R[d % 8]
        nv = [0] * 8
        for j in range(4):
            x0 = (v[2 * j] + v[2 * j + 1]) & MASK64
            x1 = _rotl(v[2 * j + 1], rot[j]) ^ x0
            v[2 * j], v[2 * j + 1] = x0, x1
        for i in range(8):
            nv[i] = v[_PERM[i]]
        v = nv
    s = 18
    for i in range(8):
        v[i] = (v[i] + k[(s + i) % 9]) & MASK64
    v[5] = (v[5] + t[s % 3]) & MASK64
    v[6] = (v[6] + t[(s + 1) % 3]) & MASK64
    v[7] = (v[7] + s) & MASK64
    return v


def _ubi(chain, message, block_type):
    pos = 0
    first = True
    # empty messages still process one zero block
    remaining = len(message) if message else 0
    offset = 0
    while True:
        chunk = message[offset : offset + 64]
        final = offset + 64 >= len(message)
        if not message:
            chunk = b""
            final = True
        pos += len(chunk)
        block = chunk + bytes(64 - len(chunk))
        t1 = (block_type << 56) | (1 << 62 if first else 0) | (1 << 63 if final else 0)
        tweak = (pos, t1)
        words = struct.unpack("<8Q", block)
        enc = _threefish512(chain, tweak, words)
        chain = [e ^ w for e, w in zip(enc, words)]
        first = False
        offset += 64
        if final:
            return chain


def _config_iv():
    cfg = struct.pack("<4sHH Q", b"SHA3", 1, 0, 256) + bytes(16)
    return _ubi([0] * 8, cfg, _T_CFG)


_IV = _config_iv()


def skein256(data: bytes) -> bytes:
    g = _ubi(_IV, data, _T_MSG)
    out = _ubi(g, struct.pack("<Q", 0), _T_OUT)
    return struct.pack("<8Q", *out)[:32]

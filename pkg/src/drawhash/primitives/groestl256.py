"""Groestl-256 (final-round tweaked version), an AES-flavored wide-pipe
hash and the second memory-hard-hash finalizer.

State is an 8x8 byte matrix filled column by column from the 64-byte
block.  Compression is h' = P(h^m) ^ Q(m) ^ h; the output transform is
the last 32 bytes of P(h) ^ h.
"""

import struct

from .aes import SBOX, _gf_mul

_SHIFT_P = (0, 1, 2, 3, 4, 5, 6, 7)
_SHIFT_Q = (1, 3, 5, 7, 0, 2, 4, 6)

# MixBytes multiplies each column by circ(2,2,3,4,5,3,5,7); precompute the
# GF(2^8) times-tables once
_MUL = {
    f: bytes(_gf_mul(x, f) for x in range(256)) for f in (2, 3, 4, 5, 7)
}
_COEFF = (2, 2, 3, 4, 5, 3, 5, 7)


def _perm(mat, variant, rounds=10):
    # mat: list of 8 bytearrays (rows), column-major mapping byte k -> mat[k % 8][k // 8]
    for rnd in range(rounds):
        if variant == "P":
            for i in range(8):
                mat[0][i] ^= (i << 4) ^ rnd
        else:
            for i in range(8):
                for j in range(7):
                    mat[j][i] ^= 0xFF
                mat[7][i] ^= (i << 4) ^ 0xFF ^ rnd
        shifts = _SHIFT_P if variant == "P" else _SHIFT_Q
        for r in range(8):
            row = mat[r]
            sub = bytes(SBOX[b] for b in row)
            s = shifts[r]
            mat[r] = bytearray(sub[s:] + sub[:s])
        mixed = [bytearray(8) for _ in range(8)]
        for c in range(8):
            col = [mat[r][c] for r in range(8)]
            for r in range(8):
                acc = 0
                for k, f in enumerate(_COEFF):
                    v = col[(r + k) % 8]
                    acc ^= v if f == 1 else _MUL[f][v]
                mixed[r][c] = acc
        mat = mixed
    return mat


def _block_to_mat(block):
    mat = [bytearray(8) for _ in range(8)]
    for k in range(64):
        mat[k % 8][k // 8] = block[k]
    return mat


def _mat_to_block(mat):
    out = bytearray(64)
    for k in range(64):
        out[k] = mat[k % 8][k // 8]
    return bytes(out)


def _compress(h, m):
    hm = bytes(a ^ b for a, b in zip(h, m))
    p = _mat_to_block(_perm(_block_to_mat(hm), "P"))
    q = _mat_to_block(_perm(_block_to_mat(m), "Q"))
    return bytes(a ^ b ^ c for a, b, c in zip(p, q, h))


def groestl256(data: bytes) -> bytes:
    # IV: 512-bit zero block ending in the digest length 256 as big-endian
    h = bytes(56) + struct.pack(">Q", 256)

    rem = len(data) % 64
    n_full = len(data) // 64
    for i in range(n_full):
        h = _compress(h, data[64 * i : 64 * i + 64])

    tail = bytearray(data[64 * n_full :])
    tail.append(0x80)
    if len(tail) <= 56:
        blocks = 1
    else:
        blocks = 2
    total_blocks = n_full + blocks
    pad = tail + bytes(64 * blocks - len(tail) - 8) + struct.pack(">Q", total_blocks)
    for i in range(blocks):
        h = _compress(h, bytes(pad[64 * i : 64 * i + 64]))

    final = _mat_to_block(_perm(_block_to_mat(h), "P"))
    out = bytes(a ^ b for a, b in zip(final, h))
    return out[32:]

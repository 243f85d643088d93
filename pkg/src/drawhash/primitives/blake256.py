"""BLAKE-256 (the SHA-3 finalist, 14-round final version), zero salt.

One of the four output finalizers of the memory-hard hash.  The counter
tracks real message bits only; a compression that processes nothing but
padding runs with the counter zeroed, which is the one genuinely fiddly
part of the algorithm.
"""

import struct

MASK32 = 0xFFFFFFFF

_IV = (
    0x6A09E667, 0xBB67AE85, 0x3C6EF372, 0xA54FF53A,
    0x510E527F, 0x9B05688C, 0x1F83D9AB, 0x5BE0CD19,
)

_C = (
    0x243F6A88, 0x85A308D3, 0x13198A2E, 0x03707344,
    0xA4093822, 0x299F31D0, 0x082EFA98, 0xEC4E6C89,
    0x452821E6, 0x38D01377, 0xBE5466CF, 0x34E90C6C,
    0xC0AC29B7, 0xC97C50DD, 0x3F84D5B5, 0xB5470917,
)

_SIGMA = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15),
    (14, 10, 4, 8, 9, 15, 13, 6, 1, 12, 0, 2, 11, 7, 5, 3),
    (11, 8, 12, 0, 5, 2, 15, 13, 10, 14, 3, 6, 7, 1, 9, 4),
    (7, 9, 3, 1, 13, 12, 11, 14, 2, 6, 5, 10, 4, 0, 15, 8),
    (9, 0, 5, 7, 2, 4, 10, 15, 14, 1, 11, 12, 6, 8, 3, 13),
    (2, 12, 6, 10, 0, 11, 8, 3, 4, 13, 7, 5, 15, 14, 1, 9),
    (12, 5, 1, 15, 14, 13, 4, 10, 0, 7, 6, 3, 9, 2, 8, 11),
    (13, 11, 7, 14, 12, 1, 3, 9, 5, 0, 15, 4, 8, 6, 2, 10),
    (6, 15, 14, 9, 11, 3, 0, 8, 12, 2, 13, 7, 1, 4, 10, 5),
    (10, 2, 8, 4, 7, 6, 1, 5, 15, 11, 9, 14, 3, 12, 13, 0),
)

# G calls per round: 4 columns then 4 diagonals of the 4x4 word matrix
_SLOTS = (
    (0, 4, 8, 12), (1, 5, 9, 13), (2, 6, 10, 14), (3, 7, 11, 15),
    (0, 5, 10, 15), (1, 6, 11, 12), (2, 7, 8, 13), (3, 4, 9, 14),
)


def _rotr(v, n):
    return ((v >> n) | (v << (32 - n))) & MASK32


def _compress(h, block, t_bits, nullt):
    m = struct.unpack(">16I", block)
    v = list(h) + [
        _C[0], _C[1], _C[2], _C[3],
        _C[4], _C[5], _C[6], _C[7],
    ]
    if not nullt:
        t0 = t_bits & MASK32
        t1 = (t_bits >> 32) & MASK32
        v[12] ^= t0
        v[13] ^= t0
        v[14] ^= t1
        v[15] ^= t1
    for rnd in range(14):
        sig = _SIGMA[rnd % 10]
        for i, (ia, ib, ic, id_) in enumerate(_SLOTS):
            a, b, c, d = v[ia], v[ib], v[ic], v[id_]
            j, k = sig[2 * i], sig[2 * i + 1]
            a = (a + b + (m[j] ^ _C[k])) & MASK32
            d = _rotr(d ^ a, 16)
            c = (c + d) & MASK32
            b = _rotr(b ^ c, 12)
            a = (a + b + (m[k] ^ _C[j])) & MASK32
            d = _rotr(d ^ a, 8)
            c = (c + d) & MASK32
            b = _rotr(b ^ c, 7)
            v[ia], v[ib], v[ic], v[id_] = a, b, c, d
    return [h[i] ^ v[i] ^ v[i + 8] for i in range(8)]


def blake256(data: bytes) -> bytes:
    h = list(_IV)
    total_bits = len(data) * 8
    n_full = len(data) // 64
    rem = len(data) % 64

    for i in range(n_full):
        h = _compress(h, data[64 * i : 64 * i + 64], 512 * (i + 1), nullt=False)

    tail = data[64 * n_full :]
    length = struct.pack(">Q", total_bits)
    if rem == 55:
        block = tail + b"\x81" + length
        h = _compress(h, block, total_bits, nullt=False)
    elif rem < 55:
        pad = bytearray(64)
        pad[:rem] = tail
        pad[rem] = 0x80
        pad[55] |= 0x01
        pad[56:] = length
        h = _compress(h, bytes(pad), total_bits, nullt=(rem == 0))
    else:  # 56..63: padding spills into a second block
        pad = bytearray(64)
        pad[:rem] = tail
        pad[rem] = 0x80
        h = _compress(h, bytes(pad), total_bits, nullt=False)
        last = bytearray(64)
        last[55] = 0x01
        last[56:] = length
        h = _compress(h, bytes(last), 0, nullt=True)
    return struct.pack(">8I", *h)

"""Single AES round and the 10-round-key expansion the memory-hard hash
uses.

Software only; the point is a portable oracle, not speed.  The S-box is
generated from the GF(2^8) inversion + affine map definition instead of a
typed-in table, and the composite cipher built from these pieces is
checked against an independent AES implementation in the tests.
"""

import numpy as np


def _gf_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        if a & 0x100:
            a ^= 0x11B
        b >>= 1
    return out


def _build_sbox():
    def rotl8(v, n):
        return ((v << n) | (v >> (8 - n))) & 0xFF

    inv = [0] * 256
    for x in range(1, 256):
        for y in range(1, 256):
            if _gf_mul(x, y) == 1:
                inv[x] = y
                break
    sbox = []
    for x in range(256):
        i = inv[x]
        sbox.append(i ^ rotl8(i, 1) ^ rotl8(i, 2) ^ rotl8(i, 3) ^ rotl8(i, 4) ^ 0x63)
    return bytes(sbox)


SBOX = _build_sbox()
SBOX_NP = np.frombuffer(SBOX, dtype=np.uint8).copy()
# xtime (multiply by 2 in GF(2^8)) as a table, handy for jitted callers
XTIME_NP = np.array([_gf_mul(x, 2) for x in range(256)], dtype=np.uint8)

_RCON = (0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36)


def aes_round(block: bytes, round_key: bytes) -> bytes:
    """SubBytes, ShiftRows, MixColumns, AddRoundKey on one 16-byte block."""
    if len(block) != 16 or len(round_key) != 16:
        raise ValueError("block and round key must be 16 bytes")
    s = [SBOX[b] for b in block]
    # state is column-major: byte r + 4*c sits at row r, column c.
    # ShiftRows rotates row r left by r.
    shifted = [s[(i + 4 * ((i % 4))) % 16] for i in range(16)]
    out = bytearray(16)
    for c in range(4):
        col = shifted[4 * c : 4 * c + 4]
        for r in range(4):
            out[4 * c + r] = (
                _gf_mul(col[r], 2)
                ^ _gf_mul(col[(r + 1) % 4], 3)
                ^ col[(r + 2) % 4]
                ^ col[(r + 3) % 4]
            ) ^ round_key[4 * c + r]
    return bytes(out)


def _sub_word(w: int) -> int:
    return (
        (SBOX[(w >> 24) & 0xFF] << 24)
        | (SBOX[(w >> 16) & 0xFF] << 16)
        | (SBOX[(w >> 8) & 0xFF] << 8)
        | SBOX[w & 0xFF]
    )


def _rot_word(w: int) -> int:
    return ((w << 8) | (w >> 24)) & 0xFFFFFFFF


def expand_key(key: bytes, rounds_words: int) -> bytes:
    """AES key schedule (Nk = len(key)//4), returning rounds_words words."""
    nk = len(key) // 4
    if len(key) not in (16, 32):
        raise ValueError("key must be 16 or 32 bytes")
    words = [int.from_bytes(key[4 * i : 4 * i + 4], "big") for i in range(nk)]
    i = nk
    while len(words) < rounds_words:
        temp = words[-1]
        if i % nk == 0:
            temp = _sub_word(_rot_word(temp)) ^ (_RCON[i // nk - 1] << 24)
        elif nk > 6 and i % nk == 4:
            temp = _sub_word(temp)
        words.append(words[-nk] ^ temp)
        i += 1
    return b"".join(w.to_bytes(4, "big") for w in words)


def cn_expand_key(key: bytes):
    """First 10 round keys of the AES-256 schedule, as 16-byte blocks."""
    if len(key) != 32:
        raise ValueError("key must be 32 bytes")
    raw = expand_key(key, 40)
    return [raw[16 * i : 16 * i + 16] for i in range(10)]

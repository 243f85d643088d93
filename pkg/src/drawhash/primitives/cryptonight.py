"""Reference memory-hard slow hash (the original CryptoNote variant).

Three phases over a 2 MB scratchpad: AES-based scratchpad fill, a
524288-iteration loop of dependent random reads/writes, and an AES mixing
pass, bracketed by Keccak.  One of four finalizer hashes (selected by the
low two bits of the permuted state) produces the 32-byte digest.

The scratchpad phases are numba-jitted or this oracle would be unusably
slow in CI; the jitted code is a straight transcription of the scalar
algorithm and is pinned to external test vectors like everything else.
"""

import sys

import numpy as np
from numba import njit

from .aes import SBOX_NP, XTIME_NP, cn_expand_key
from .blake256 import blake256
from .groestl256 import groestl256
from .jh256 import jh256
from .keccak import keccak_cn, keccak_permute_bytes
from .skein256 import skein256

assert sys.byteorder == "little", "scratchpad word views assume a little-endian host"

SCRATCHPAD_BYTES = 2097152  # 2 MB
CN_ITERATIONS = 524288  # 2**19 memory-hard loop bodies
INIT_BLOCKS = SCRATCHPAD_BYTES // 128  # 16384 rows of 128 bytes

_ADDR_MASK = np.uint64(0x1FFFF0)
_U4 = np.uint64(4)
_U8 = np.uint64(8)
_U32MASK = np.uint64(0xFFFFFFFF)
_U32SHIFT = np.uint64(32)
_BYTE = np.uint64(0xFF)
_SHIFTS8 = np.arange(0, 64, 8, dtype=np.uint64)


@njit(cache=True)
def _aes_round_inplace(block, key, sbox, xt):
    tmp = np.empty(16, np.uint8)
    for c in range(4):
        for r in range(4):
            tmp[4 * c + r] = sbox[block[(4 * (c + r) + r) % 16]]
    for c in range(4):
        s0 = tmp[4 * c + 0]
        s1 = tmp[4 * c + 1]
        s2 = tmp[4 * c + 2]
        s3 = tmp[4 * c + 3]
        block[4 * c + 0] = xt[s0] ^ xt[s1] ^ s1 ^ s2 ^ s3 ^ key[4 * c + 0]
        block[4 * c + 1] = s0 ^ xt[s1] ^ xt[s2] ^ s2 ^ s3 ^ key[4 * c + 1]
        block[4 * c + 2] = s0 ^ s1 ^ xt[s2] ^ xt[s3] ^ s3 ^ key[4 * c + 2]
        block[4 * c + 3] = xt[s0] ^ s0 ^ s1 ^ s2 ^ xt[s3] ^ key[4 * c + 3]


@njit(cache=True)
def _fill_scratchpad(pad8, text8, rks, sbox, xt):
    for i in range(INIT_BLOCKS):
        for j in range(8):
            blk = text8[16 * j : 16 * j + 16]
            for r in range(10):
                _aes_round_inplace(blk, rks[16 * r : 16 * r + 16], sbox, xt)
        pad8[128 * i : 128 * i + 128] = text8


@njit(cache=True)
def _mix_scratchpad(pad8, text8, rks, sbox, xt):
    for i in range(INIT_BLOCKS):
        base = 128 * i
        for j in range(8):
            blk = text8[16 * j : 16 * j + 16]
            for k in range(16):
                blk[k] ^= pad8[base + 16 * j + k]
            for r in range(10):
                _aes_round_inplace(blk, rks[16 * r : 16 * r + 16], sbox, xt)


@njit(cache=True)
def _aes_round_words(x0, x1, k0, k1, sbox, xt, shifts):
    tmp = np.empty(16, np.uint8)
    for idx in range(16):
        src = (4 * ((idx // 4) + (idx % 4)) + (idx % 4)) % 16
        if src < 8:
            b = (x0 >> shifts[src]) & _BYTE
        else:
            b = (x1 >> shifts[src - 8]) & _BYTE
        tmp[idx] = sbox[b]
    y0 = np.uint64(0)
    y1 = np.uint64(0)
    for c in range(4):
        s0 = tmp[4 * c + 0]
        s1 = tmp[4 * c + 1]
        s2 = tmp[4 * c + 2]
        s3 = tmp[4 * c + 3]
        o0 = xt[s0] ^ xt[s1] ^ s1 ^ s2 ^ s3
        o1 = s0 ^ xt[s1] ^ xt[s2] ^ s2 ^ s3
        o2 = s0 ^ s1 ^ xt[s2] ^ xt[s3] ^ s3
        o3 = xt[s0] ^ s0 ^ s1 ^ s2 ^ xt[s3]
        word = (
            np.uint64(o0)
            | (np.uint64(o1) << shifts[1])
            | (np.uint64(o2) << shifts[2])
            | (np.uint64(o3) << shifts[3])
        )
        if c < 2:
            y0 |= word << shifts[4 * c]
        else:
            y1 |= word << shifts[4 * (c - 2)]
    return y0 ^ k0, y1 ^ k1


@njit(cache=True)
def _mul128(x, y):
    x_lo = x & _U32MASK
    x_hi = x >> _U32SHIFT
    y_lo = y & _U32MASK
    y_hi = y >> _U32SHIFT
    ll = x_lo * y_lo
    lh = x_lo * y_hi
    hl = x_hi * y_lo
    hh = x_hi * y_hi
    mid = (ll >> _U32SHIFT) + (lh & _U32MASK) + (hl & _U32MASK)
    lo = (ll & _U32MASK) | ((mid & _U32MASK) << _U32SHIFT)
    hi = hh + (lh >> _U32SHIFT) + (hl >> _U32SHIFT) + (mid >> _U32SHIFT)
    return hi, lo


@njit(cache=True)
def _memory_hard_loop(pad64, a0, a1, b0, b1, iterations, sbox, xt, shifts):
    done = 0
    max_block = np.uint64(0)
    for _ in range(iterations):
        # half 1: AES round keyed by a, xor-write b
        j = (a0 & _ADDR_MASK) >> _U4
        if j > max_block:
            max_block = j
        w = j << np.uint64(1)
        c0, c1 = _aes_round_words(pad64[w], pad64[w + np.uint64(1)], a0, a1, sbox, xt, shifts)
        pad64[w] = b0 ^ c0
        pad64[w + np.uint64(1)] = b1 ^ c1
        b0, b1, a0, a1 = a0, a1, c0, c1
        # half 2: 64x64 multiply-add, xor-read
        j = (a0 & _ADDR_MASK) >> _U4
        if j > max_block:
            max_block = j
        w = j << np.uint64(1)
        d0 = pad64[w]
        d1 = pad64[w + np.uint64(1)]
        hi, lo = _mul128(a0, d0)
        b0 = b0 + hi
        b1 = b1 + lo
        pad64[w] = b0
        pad64[w + np.uint64(1)] = b1
        na0 = d0 ^ b0
        na1 = d1 ^ b1
        b0, b1 = a0, a1
        a0, a1 = na0, na1
        done += 1
    return done, max_block


_FINALIZERS = (blake256, groestl256, jh256, skein256)


def _keys_to_array(keys) -> np.ndarray:
    return np.frombuffer(b"".join(keys), dtype=np.uint8).copy()


def cn_slow_hash_with_stats(data: bytes, iterations: int = CN_ITERATIONS):
    state = bytearray(keccak_cn(data))

    pad = np.zeros(SCRATCHPAD_BYTES, dtype=np.uint8)
    text = np.frombuffer(bytes(state[64:192]), dtype=np.uint8).copy()
    rks = _keys_to_array(cn_expand_key(bytes(state[0:32])))
    _fill_scratchpad(pad, text, rks, SBOX_NP, XTIME_NP)

    ab = bytes(x ^ y for x, y in zip(state[0:32], state[32:64]))
    a0, a1, b0, b1 = np.frombuffer(ab, dtype=np.uint64)
    pad64 = pad.view(np.uint64)
    done, max_block = _memory_hard_loop(
        pad64, a0, a1, b0, b1, iterations, SBOX_NP, XTIME_NP, _SHIFTS8
    )

    text = np.frombuffer(bytes(state[64:192]), dtype=np.uint8).copy()
    rks2 = _keys_to_array(cn_expand_key(bytes(state[32:64])))
    _mix_scratchpad(pad, text, rks2, SBOX_NP, XTIME_NP)
    state[64:192] = text.tobytes()

    permuted = keccak_permute_bytes(bytes(state))
    which = permuted[0] & 3
    digest = _FINALIZERS[which](permuted)
    stats = {
        "iterations": int(done),
        "max_block_index": int(max_block),
        "finalizer": _FINALIZERS[which].__name__,
    }
    return digest, stats


def cn_slow_hash(data: bytes) -> bytes:
    digest, _ = cn_slow_hash_with_stats(data)
    return digest

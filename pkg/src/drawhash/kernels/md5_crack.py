"""MD5 brute-force kernels for all three constraint profiles.

Every invocation scans its C-candidate sub-range in ascending index
order and outputs 1 + offset of the first candidate whose digest equals
the target, or 0.  Candidate bytes are derived in-kernel from the u64
index (charset lookups model texture fetches).  Candidates must fit one
MD5 block (<= 55 bytes), which covers any realistic brute-force setting.

The webgl1 variant computes the whole digest through the two-half float
emulation layer; webgl2/native run on native 32-bit integers, with
rotation synthesized from shifts under webgl2 because the shading
language has no rotate.
"""

import math

import numpy as np
from numba import njit

from .. import u32
from ..profiles import KernelMeta
from ..u32 import U32Pair

MASK32 = 0xFFFFFFFF

# round constants from the floor(abs(sin(i+1)) * 2^32) definition
_T_TABLE = np.array(
    [int(abs(math.sin(i + 1)) * 4294967296) & MASK32 for i in range(64)], dtype=np.int64
)
_S_TABLE = np.array(
    [7, 12, 17, 22] * 4 + [5, 9, 14, 20] * 4 + [4, 11, 16, 23] * 4 + [6, 10, 15, 21] * 4,
    dtype=np.int64,
)
_IV = (0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476)


@njit(cache=True)
def _scan_words(start, count, charset, clen, t0, t1, t2, t3, ttab, stab):
    base = len(charset)
    m = np.zeros(16, np.int64)
    for off in range(count):
        idx = start + off
        for w in range(16):
            m[w] = 0
        x = idx
        for pos in range(clen):
            d = x % base
            x //= base
            m[pos >> 2] |= charset[d] << (8 * (pos & 3))
        m[clen >> 2] |= 0x80 << (8 * (clen & 3))
        m[14] = (clen * 8) & 0xFFFFFFFF

        a = 0x67452301
        b = 0xEFCDAB89
        c = 0x98BADCFE
        d = 0x10325476
        for r in range(64):
            if r < 16:
                f = (b & c) | (~b & d)
                g = r
            elif r < 32:
                f = (d & b) | (~d & c)
                g = (5 * r + 1) % 16
            elif r < 48:
                f = b ^ c ^ d
                g = (3 * r + 5) % 16
            else:
                f = c ^ (b | ~d)
                g = (7 * r) % 16
            f = (f & 0xFFFFFFFF) + a + ttab[r] + m[g]
            a = d
            d = c
            c = b
            s = stab[r]
            f &= 0xFFFFFFFF
            rot = ((f << s) | (f >> (32 - s))) & 0xFFFFFFFF
            b = (b + rot) & 0xFFFFFFFF
        a = (a + 0x67452301) & 0xFFFFFFFF
        b = (b + 0xEFCDAB89) & 0xFFFFFFFF
        c = (c + 0x98BADCFE) & 0xFFFFFFFF
        d = (d + 0x10325476) & 0xFFFFFFFF
        if a == t0 and b == t1 and c == t2 and d == t3:
            return off + 1
    return 0


def _scan_emu(start, count, charset, clen, target_words):
    """webgl1 path: digest computed exclusively with the float-emulated ops."""
    base = len(charset)
    iv = [u32.from_u32(v) for v in _IV]
    tw = list(target_words)
    ttab = [u32.from_u32(int(v)) for v in _T_TABLE]
    stab = [int(s) for s in _S_TABLE]
    pad_word = clen >> 2
    pad_shift = clen & 3

    for off in range(count):
        idx = start + off
        raw = [[0, 0, 0, 0] for _ in range(16)]
        x = idx
        for pos in range(clen):
            d = x % base
            x //= base
            raw[pos >> 2][pos & 3] = charset[d]
        raw[pad_word][pad_shift] = raw[pad_word][pad_shift] + 0x80
        m = [U32Pair(w[2] + w[3] * 256, w[0] + w[1] * 256) for w in raw]
        bits = clen * 8
        m[14] = U32Pair(bits // 65536, bits % 65536)

        a, b, c, d = iv
        for r in range(64):
            if r < 16:
                f = u32.emu_or(u32.emu_and(b, c), u32.emu_and(u32.emu_not(b), d))
                g = r
            elif r < 32:
                f = u32.emu_or(u32.emu_and(d, b), u32.emu_and(u32.emu_not(d), c))
                g = (5 * r + 1) % 16
            elif r < 48:
                f = u32.emu_xor(u32.emu_xor(b, c), d)
                g = (3 * r + 5) % 16
            else:
                f = u32.emu_xor(c, u32.emu_or(b, u32.emu_not(d)))
                g = (7 * r) % 16
            f = u32.emu_add(u32.emu_add(u32.emu_add(f, a), ttab[r]), m[g])
            a, d, c = d, c, b
            b = u32.emu_add(b, u32.emu_rotl(f, stab[r]))
        out = [u32.emu_add(v, i0) for v, i0 in zip((a, b, c, d), iv)]
        if out == tw:
            return off + 1
    return 0


def _target_words(digest: bytes):
    return tuple(int.from_bytes(digest[4 * i : 4 * i + 4], "little") for i in range(4))


class _Md5CrackBase:
    def __init__(self, meta: KernelMeta):
        self.meta = meta

    @staticmethod
    def _thread_params(inv):
        words = inv.inputs[0].data.view(np.uint32)
        start = int(words[4 * inv.index]) + (int(words[4 * inv.index + 1]) << 32)
        count = int(words[4 * inv.index + 2])
        charset = inv.inputs[1].data
        clen = inv.uniforms["cand_len"]
        charset = charset[: inv.uniforms["charset_len"]]
        if clen > 55:
            raise ValueError("candidates longer than one MD5 block are unsupported")
        return start, count, charset, clen


class Md5CrackJit(_Md5CrackBase):
    def invoke(self, inv) -> int:
        start, count, charset, clen = self._thread_params(inv)
        return int(
            _scan_words(
                start,
                count,
                charset,
                clen,
                inv.uniforms["t0"],
                inv.uniforms["t1"],
                inv.uniforms["t2"],
                inv.uniforms["t3"],
                _T_TABLE,
                _S_TABLE,
            )
        )


class Md5CrackEmu(_Md5CrackBase):
    def invoke(self, inv) -> int:
        start, count, charset, clen = self._thread_params(inv)
        targets = tuple(
            u32.from_u32(inv.uniforms["t%d" % i]) for i in range(4)
        )
        return _scan_emu(start, count, bytes(charset), clen, targets)


_METAS = {
    "webgl1": KernelMeta(
        kernel_id="md5_crack_webgl1",
        requires_native_u32=False,
        requires_dynamic_indexing=False,
        used_bitwise_ops=frozenset(),
        op_count=12000,
    ),
    "webgl2": KernelMeta(
        kernel_id="md5_crack_webgl2",
        requires_native_u32=True,
        requires_dynamic_indexing=False,
        used_bitwise_ops=frozenset({"and", "or", "xor", "not", "shl", "shr"}),
        op_count=2600,
    ),
    "native": KernelMeta(
        kernel_id="md5_crack_native",
        requires_native_u32=True,
        requires_dynamic_indexing=False,
        used_bitwise_ops=frozenset({"and", "or", "xor", "not", "shl", "shr", "rotl"}),
        op_count=2000,
    ),
}


def for_profile(profile_name: str):
    meta = _METAS.get(profile_name)
    if meta is None:
        raise ValueError("no md5_crack kernel for profile %r" % (profile_name,))
    if profile_name == "webgl1":
        return Md5CrackEmu(meta)
    return Md5CrackJit(meta)


def crack_uniforms(keyspace, target_digest: bytes) -> dict:
    t0, t1, t2, t3 = _target_words(target_digest)
    return {
        "t0": t0,
        "t1": t1,
        "t2": t2,
        "t3": t3,
        "charset_len": len(keyspace.charset),
        "cand_len": keyspace.length,
    }


def charset_buffer(keyspace):
    from ..profiles import DataBuffer

    n = len(keyspace.charset)
    width = (n + 3) // 4
    raw = keyspace.charset + bytes(width * 4 - n)
    return DataBuffer("rgba8", width, 1, raw)

"""32-bit unsigned arithmetic built only from GL-1.0-era shader math.

A WebGL 1.0 fragment shader has no integer types wider than what a float
mantissa holds exactly, no bitwise operators, and no data-dependent array
indexing.  This module emulates u32 values as a pair of 16-bit halves and
implements add/and/or/xor/not/shift/rotate using nothing but +, -, *,
floor division, modulo and exp2-style powers of two.  Every intermediate
term stays below 2**24 so the whole thing maps onto exact float math.

The restriction is load-bearing: tests audit this file's AST and fail if
a native bitwise operator or a subscript expression sneaks in.
"""

from typing import NamedTuple

HALF = 65536  # 2**16
MASK32 = 4294967295


class U32Pair(NamedTuple):
    hi: int
    lo: int


def check_pair(p: U32Pair) -> None:
    if not (0 <= p.hi < HALF and 0 <= p.lo < HALF):
        raise ValueError("half out of range: %r" % (p,))


def from_u32(x: int) -> U32Pair:
    if not 0 <= x <= MASK32:
        raise ValueError("not a u32: %r" % (x,))
    return U32Pair(x // HALF, x % HALF)


def to_u32(p: U32Pair) -> int:
    return p.hi * HALF + p.lo


def emu_add(a: U32Pair, b: U32Pair) -> U32Pair:
    lo = a.lo + b.lo
    carry = lo // HALF
    hi = a.hi + b.hi + carry
    return U32Pair(hi % HALF, lo % HALF)


def _half_and(xl, xh, yl, yh):
    # One fused pass over the 16 bit positions of both halves.  Bits are
    # peeled off with mod/div; AND of two bits is their product.
    al = 0
    ah = 0
    weight = 1
    for _ in range(16):
        al += (xl % 2) * (yl % 2) * weight
        ah += (xh % 2) * (yh % 2) * weight
        xl //= 2
        xh //= 2
        yl //= 2
        yh //= 2
        weight *= 2
    return al, ah


def emu_and(a: U32Pair, b: U32Pair) -> U32Pair:
    al, ah = _half_and(a.lo, a.hi, b.lo, b.hi)
    return U32Pair(ah, al)


def emu_or(a: U32Pair, b: U32Pair) -> U32Pair:
    # x | y == x + y - (x & y), per half
    al, ah = _half_and(a.lo, a.hi, b.lo, b.hi)
    return U32Pair(a.hi + b.hi - ah, a.lo + b.lo - al)


def emu_xor(a: U32Pair, b: U32Pair) -> U32Pair:
    # x ^ y == x + y - 2*(x & y), per half
    al, ah = _half_and(a.lo, a.hi, b.lo, b.hi)
    return U32Pair(a.hi + b.hi - 2 * ah, a.lo + b.lo - 2 * al)


def emu_not(a: U32Pair) -> U32Pair:
    return U32Pair(HALF - 1 - a.hi, HALF - 1 - a.lo)


def _check_shift(k: int) -> None:
    if not 0 <= k <= 31:
        raise ValueError("shift count out of range: %r" % (k,))


def emu_shl(a: U32Pair, k: int) -> U32Pair:
    _check_shift(k)
    if k == 0:
        return a
    if k < 16:
        keep = 2 ** (16 - k)
        scale = 2 ** k
        lo = (a.lo % keep) * scale
        hi = (a.hi % keep) * scale + a.lo // keep
        return U32Pair(hi, lo)
    keep = 2 ** (32 - k)
    scale = 2 ** (k - 16)
    return U32Pair((a.lo % keep) * scale, 0)


def emu_shr(a: U32Pair, k: int) -> U32Pair:
    _check_shift(k)
    if k == 0:
        return a
    if k < 16:
        scale = 2 ** k
        spill = 2 ** (16 - k)
        lo = a.lo // scale + (a.hi % scale) * spill
        hi = a.hi // scale
        return U32Pair(hi, lo)
    return U32Pair(0, a.hi // 2 ** (k - 16))


def emu_rotl(a: U32Pair, k: int) -> U32Pair:
    _check_shift(k)
    if k == 0:
        return a
    left = emu_shl(a, k)
    right = emu_shr(a, 32 - k)
    # the two parts occupy disjoint bits, so + is exact here
    return U32Pair(left.hi + right.hi, left.lo + right.lo)


def emu_rotr(a: U32Pair, k: int) -> U32Pair:
    _check_shift(k)
    if k == 0:
        return a
    return emu_rotl(a, 32 - k)


# name -> (callable, arity), used by the audit test and by kernels that
# want to enumerate the available ops
EMU_OPS = {
    "add": (emu_add, 2),
    "and": (emu_and, 2),
    "or": (emu_or, 2),
    "xor": (emu_xor, 2),
    "not": (emu_not, 1),
    "shl": (emu_shl, 2),
    "shr": (emu_shr, 2),
    "rotl": (emu_rotl, 2),
    "rotr": (emu_rotr, 2),
}

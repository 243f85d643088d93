"""Keccak-f[1600] permutation and the sponge variants built on it.

keccak_cn absorbs with rate 136 and the original 0x01 domain padding and
returns the whole 200-byte state, which is what the memory-hard hash
needs.  The first 32 bytes of that state are exactly Keccak-256 of the
input (same rate, same padding), which gives tests an easy cross-check.
"""

MASK64 = (1 << 64) - 1

_RC = (
    0x0000000000000001, 0x0000000000008082, 0x800000000000808A, 0x8000000080008000,
    0x000000000000808B, 0x0000000080000001, 0x8000000080008081, 0x8000000000008009,
    0x000000000000008A, 0x0000000000000088, 0x0000000080008009, 0x000000008000000A,
    0x000000008000808B, 0x800000000000008B, 0x8000000000008089, 0x8000000000008003,
    0x8000000000008002, 0x8000000000000080, 0x000000000000800A, 0x800000008000000A,
    0x8000000080008081, 0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
)

# rotation offset for lane (x, y), indexed _ROT[x][y]
_ROT = (
    (0, 36, 3, 41, 18),
    (1, 44, 10, 45, 2),
    (62, 6, 43, 15, 61),
    (28, 55, 25, 21, 56),
    (27, 20, 39, 8, 14),
)


def _rotl64(v: int, n: int) -> int:
    return ((v << n) | (v >> (64 - n))) & MASK64


def keccak_f1600(lanes):
    """24-round permutation over 25 64-bit lanes, lane (x, y) at [x + 5*y]."""
    if len(lanes) != 25:
        raise ValueError("state must be 25 lanes")
    a = list(lanes)
    for lane in a:
        if not 0 <= lane <= MASK64:
            raise ValueError("lane out of 64-bit range")
    for rc in _RC:
        c = [a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20] for x in range(5)]
        d = [c[(x - 1) % 5] ^ _rotl64(c[(x + 1) % 5], 1) for x in range(5)]
        a = [a[i] ^ d[i % 5] for i in range(25)]
        b = [0] * 25
        for x in range(5):
            for y in range(5):
                b[y + 5 * ((2 * x + 3 * y) % 5)] = _rotl64(a[x + 5 * y], _ROT[x][y])
        a = [
            b[i] ^ ((b[(i + 1) % 5 + 5 * (i // 5)] ^ MASK64) & b[(i + 2) % 5 + 5 * (i // 5)])
            for i in range(25)
        ]
        a[0] ^= rc
    return a


def _state_to_bytes(lanes) -> bytes:
    return b"".join(lane.to_bytes(8, "little") for lane in lanes)


def _bytes_to_state(raw: bytes):
    return [int.from_bytes(raw[8 * i : 8 * i + 8], "little") for i in range(25)]


def keccak_sponge_state(data: bytes, rate: int = 136, pad: int = 0x01) -> bytes:
    """Absorb data and return the full 200-byte state after the last
    permutation.  pad is the domain byte (0x01 classic Keccak, 0x06 SHA-3)."""
    if not 0 < rate < 200 or rate % 8:
        raise ValueError("bad rate")
    lanes = [0] * 25
    pos = 0
    while len(data) - pos >= rate:
        for i in range(rate // 8):
            lanes[i] ^= int.from_bytes(data[pos + 8 * i : pos + 8 * i + 8], "little")
        lanes = keccak_f1600(lanes)
        pos += rate
    block = bytearray(data[pos:])
    block.append(pad)
    block.extend(b"\x00" * (rate - len(block)))
    block[rate - 1] ^= 0x80
    for i in range(rate // 8):
        lanes[i] ^= int.from_bytes(block[8 * i : 8 * i + 8], "little")
    lanes = keccak_f1600(lanes)
    return _state_to_bytes(lanes)


def keccak_cn(data: bytes) -> bytes:
    """200-byte Keccak state as consumed by the memory-hard hash."""
    return keccak_sponge_state(data, rate=136, pad=0x01)


def keccak_256(data: bytes) -> bytes:
    return keccak_cn(data)[:32]


def keccak_permute_bytes(raw: bytes) -> bytes:
    """keccak_f1600 over a 200-byte little-endian state image."""
    if len(raw) != 200:
        raise ValueError("state must be 200 bytes")
    return _state_to_bytes(keccak_f1600(_bytes_to_state(raw)))

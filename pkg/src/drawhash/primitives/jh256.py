"""JH-256 (42-round final version), the third memory-hard-hash finalizer.

Bit-sliced formulation: the 1024-bit state lives in eight 128-bit words,
each round is an S-box boolean circuit keyed by one round-constant bit
per 4-bit element, a linear GF(16) mix, and a bit-group swap whose width
cycles 1, 2, 4, 8, 16, 32, 64 over each block of seven rounds.
"""

MASK128 = (1 << 128) - 1

# little-endian 128-byte chaining value for 256-bit output
_H0_HEX = (
    "eb98a3412c20d3eb92cdbe7b9cb245c11c93519160d4c7fa260082d67e508a03"
    "a4239e267726b945e0fb1a48d41a9477cdb5ab26026b177a56f024420fff2fa8"
    "71a396897f2e4d751d144908f77de262277695f776248f9487d5b6574780296c"
    "5c5e272dac8e0d6c518450c657057a0f7be4d367702412ea89e3ab13d31cd769"
)

_ROUND_CONSTANTS_HEX = (
    "72d5dea2df15f8677b84150ab723155781abd6904d5a87f64e9f4fc5c3d12b40",
    "ea983ae05c45fa9c03c5d29966b2999a660296b4f2bb538ab556141a88dba231",
    "03a35a5c9a190edb403fb20a87c144101c051980849e951d6f33ebad5ee7cddc",
    "10ba139202bf6b41dc786515f7bb27d00a2c813937aa78503f1abfd2410091d3",
    "422d5a0df6cc7e90dd629f9c92c097ce185ca70bc72b44acd1df65d663c6fc23",
    "976e6c039ee0b81a2105457e446ceca8eef103bb5d8e61fafd9697b294838197",
    "4a8e8537db03302f2a678d2dfb9f6a958afe7381f8b8696c8ac77246c07f4214",
    "c5f4158fbdc75ec475446fa78f11bb8052de75b7aee488bc82b8001e98a6a3f4",
    "8ef48f33a9a36315aa5f5624d5b7f989b6f1ed207c5ae0fd36cae95a06422c36",
    "ce2935434efe983d533af974739a4ba7d0f51f596f4e81860e9dad81afd85a9f",
    "a7050667ee34626a8b0b28be6eb9172747740726c680103fe0a07e6fc67e487b",
    "0d550aa54af8a4c091e3e79f978ef19e8676728150608dd47e9e5a41f3e5b062",
    "fc9f1fec4054207ae3e41a00cef4c9844fd794f59dfa95d8552e7e1124c354a5",
    "5bdf7228bdfe6e2878f57fe20fa5c4b205897cefee49d32e447e9385eb28597f",
    "705f6937b324314a5e8628f11dd6e465c71b770451b920e774fe43e823d4878a",
    "7d29e8a3927694f2ddcb7a099b30d9c11d1b30fb5bdc1be0da24494ff29c82bf",
    "a4e7ba31b470bfff0d324405def8bc483baefc3253bbd339459fc3c1e0298ba0",
    "e5c905fdf7ae090f947034124290f134a271b701e344ed95e93b8e364f2f984a",
    "88401d63a06cf61547c1444b8752afff7ebb4af1e20ac6304670b6c5cc6e8ce6",
    "a4d5a456bd4fca00da9d844bc83e18ae7357ce453064d1ade8a6ce68145c2567",
    "a3da8cf2cb0ee11633e906589a94999a1f60b220c26f847bd1ceac7fa0d18518",
    "32595ba18ddd19d3509a1cc0aaa5b4469f3d6367e4046bbaf6ca19ab0b56ee7e",
    "1fb179eaa9282174e9bdf7353b3651ee1d57ac5a7550d3763a46c2fea37d7001",
    "f735c1af98a4d84278edec209e6b677941836315ea3adba8fac33b4d32832c83",
    "a7403b1f1c2747f35940f034b72d769ae73e4e6cd2214ffdb8fd8d39dc5759ef",
    "8d9b0c492b49ebda5ba2d74968f3700d7d3baed07a8d5584f5a5e9f0e4f88e65",
    "a0b8a2f436103b530ca8079e753eec5a9168949256e8884f5bb05c55f8babc4c",
    "e3bb3b99f387947b75daf4d6726b1c5d64aeac28dc34b36d6c34a550b828db71",
    "f861e2f2108d512ae3db643359dd75fc1cacbcf143ce3fa267bbd13c02e843b0",
    "330a5bca8829a1757f34194db416535c923b94c30e794d1e797475d7b6eeaf3f",
    "eaa8d4f7be1a39215cf47e094c23275126a32453ba323cd244a3174a6da6d5ad",
    "b51d3ea6aff2c90883593d98916b3c564cf87ca17286604d46e23ecc086ec7f6",
    "2f9833b3b1bc765e2bd666a5efc4e62a06f4b6e8bec1d43674ee8215bcef2163",
    "fdc14e0df453c969a77d5ac4065858267ec1141606e0fa167e90af3d28639d3f",
    "d2c9f2e3009bd20c5faace30b7d40c30742a5116f2e032980deb30d8e3cef89a",
    "4bc59e7bb5f17992ff51e66e048668d39b234d57e6966731cce6a6f3170a7505",
    "b17681d913326cce3c175284f805a262f42bcbb378471547ff46548223936a48",
    "38df58074e5e6565f2fc7c89fc86508e31702e44d00bca86f04009a23078474e",
    "65a0ee39d1f73883f75ee937e42c3abd2197b2260113f86fa344edd1ef9fdee7",
    "8ba0df15762592d93c85f7f612dc42bed8a7ec7cab27b07e538d7ddaaa3ea8de",
    "aa25ce93bd0269d85af643fd1a7308f9c05fefda174a19a5974d66334cfd216a",
    "35b49831db411570ea1e0fbbedcd549b9ad063a151974072f6759dbf91476fe2",
)


def _le128(raw: bytes) -> int:
    return int.from_bytes(raw, "little")


_H0 = tuple(_le128(bytes.fromhex(_H0_HEX)[16 * i : 16 * i + 16]) for i in range(8))
_RC = tuple(
    (
        _le128(bytes.fromhex(h)[0:16]),
        _le128(bytes.fromhex(h)[16:32]),
    )
    for h in _ROUND_CONSTANTS_HEX
)

_M1 = int("55" * 16, 16)
_M2 = int("33" * 16, 16)
_M4 = int("0f" * 16, 16)
_M8 = int("00ff" * 8, 16)
_M16 = int("0000ffff" * 4, 16)
_M32 = int("00000000ffffffff" * 2, 16)


def _swap(x, j):
    if j == 0:
        return ((x & _M1) << 1) | ((x >> 1) & _M1)
    if j == 1:
        return ((x & _M2) << 2) | ((x >> 2) & _M2)
    if j == 2:
        return ((x & _M4) << 4) | ((x >> 4) & _M4)
    if j == 3:
        return ((x & _M8) << 8) | ((x >> 8) & _M8)
    if j == 4:
        return ((x & _M16) << 16) | ((x >> 16) & _M16)
    if j == 5:
        return ((x & _M32) << 32) | ((x >> 32) & _M32)
    return ((x << 64) | (x >> 64)) & MASK128


def _sbox_lane(a, b, c, d, k):
    d ^= MASK128  # ~d
    a ^= (c ^ MASK128) & k
    k ^= a & b
    a ^= d & c
    d ^= (b ^ MASK128) & c
    b ^= a & c
    c ^= (d ^ MASK128) & a
    a ^= b | d
    d ^= b & c
    c ^= k
    b ^= k & a
    return a, b, c, d


def _f8(y, block):
    m = [_le128(block[16 * i : 16 * i + 16]) for i in range(4)]
    y = list(y)
    for i in range(4):
        y[i] ^= m[i]
    rnd = 0
    for _ in range(6):
        for j in range(7):
            k0, k1 = _RC[rnd]
            rnd += 1
            y[0], y[2], y[4], y[6] = _sbox_lane(y[0], y[2], y[4], y[6], k0)
            y[1], y[3], y[5], y[7] = _sbox_lane(y[1], y[3], y[5], y[7], k1)
            # linear mix across the two slices
            y[1] ^= y[2]
            y[3] ^= y[4]
            y[5] ^= y[6] ^ y[0]
            y[7] ^= y[0]
            y[0] ^= y[3]
            y[2] ^= y[5]
            y[4] ^= y[7] ^ y[1]
            y[6] ^= y[1]
            y[1] = _swap(y[1], j)
            y[3] = _swap(y[3], j)
            y[5] = _swap(y[5], j)
            y[7] = _swap(y[7], j)
    for i in range(4):
        y[i + 4] ^= m[i]
    return y


def jh256(data: bytes) -> bytes:
    y = list(_H0)
    n_full = len(data) // 64
    rem = len(data) % 64
    for i in range(n_full):
        y = _f8(y, data[64 * i : 64 * i + 64])

    length = (len(data) * 8).to_bytes(8, "big")
    if rem == 0:
        block = bytearray(64)
        block[0] = 0x80
        block[56:] = length
        y = _f8(y, bytes(block))
    else:
        block = bytearray(64)
        block[:rem] = data[64 * n_full :]
        block[rem] = 0x80
        y = _f8(y, bytes(block))
        last = bytearray(64)
        last[56:] = length
        y = _f8(y, bytes(last))
    out = b"".join(w.to_bytes(16, "little") for w in y)
    return out[96:128]

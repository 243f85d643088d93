"""Candidate enumeration and target bookkeeping for cracking and mining.

A keyspace is charset**length, enumerated by u64 index.  The digit order
puts the fastest-varying character on the LEFT, so a contiguous index
range maps to a contiguous block of candidates and range splits stay
cheap to reason about.
"""

from dataclasses import dataclass, field

MAX_TARGET = 2 ** 256 - 1
U64_MAX = 2 ** 64 - 1


@dataclass(frozen=True)
class Keyspace:
    charset: bytes
    length: int

    def __post_init__(self):
        if len(self.charset) < 1:
            raise ValueError("empty charset")
        if len(set(self.charset)) != len(self.charset):
            raise ValueError("duplicate octets in charset")
        if self.length < 1:
            raise ValueError("length must be >= 1")
        if self.size > U64_MAX:
            raise ValueError("keyspace size does not fit in u64")

    @property
    def size(self) -> int:
        return len(self.charset) ** self.length

    def to_descriptor(self) -> dict:
        return {"charset": self.charset.decode("latin-1"), "length": self.length}

    @classmethod
    def from_descriptor(cls, d: dict) -> "Keyspace":
        return cls(d["charset"].encode("latin-1"), int(d["length"]))


def index_to_candidate(ks: Keyspace, index: int) -> bytes:
    if not 0 <= index < ks.size:
        raise IndexError("index %d outside keyspace of size %d" % (index, ks.size))
    base = len(ks.charset)
    out = bytearray(ks.length)
    for i in range(ks.length):
        index, digit = divmod(index, base)
        out[i] = ks.charset[digit]
    return bytes(out)


def candidate_to_index(ks: Keyspace, candidate: bytes) -> int:
    if len(candidate) != ks.length:
        raise ValueError("candidate length %d != keyspace length %d" % (len(candidate), ks.length))
    base = len(ks.charset)
    index = 0
    for i in reversed(range(ks.length)):
        digit = ks.charset.find(candidate[i])
        if digit < 0:
            raise ValueError("octet %#x not in charset" % candidate[i])
        index = index * base + digit
    return index


@dataclass(frozen=True)
class CrackTarget:
    alg: str
    digest: bytes

    def __post_init__(self):
        from .primitives import DIGEST_SIZES

        expect = DIGEST_SIZES.get(self.alg)
        if expect is None:
            raise ValueError("unknown algorithm %r" % (self.alg,))
        if len(self.digest) != expect:
            raise ValueError("%s digest must be %d bytes, got %d" % (self.alg, expect, len(self.digest)))


@dataclass(frozen=True)
class MiningTarget:
    value: int
    difficulty: float = field(default=0.0)

    def __post_init__(self):
        if not 0 < self.value <= MAX_TARGET:
            raise ValueError("target value out of range")
        if self.difficulty == 0.0:
            object.__setattr__(self, "difficulty", MAX_TARGET / self.value)


def difficulty_to_target(difficulty) -> MiningTarget:
    """Higher difficulty means a lower target value; difficulty 1 passes
    everything but the all-ones hash."""
    if difficulty < 1:
        raise ValueError("difficulty must be >= 1")
    value = MAX_TARGET // int(difficulty)
    return MiningTarget(value=value, difficulty=float(difficulty))

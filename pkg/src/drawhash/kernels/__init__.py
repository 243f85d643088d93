"""Constraint-respecting kernels for the three workloads.

Each kernel runs inside the draw-call executor and is equivalence-tested
against the scalar primitives.  The mining kernels keep their heavy
phases in-kernel and push the small-but-bulky finalization code to the
host side, mirroring how a real shader build splits work.
"""

from dataclasses import dataclass, field
from importlib import resources

from ..keyspace import CrackTarget, MiningTarget
from ..profiles import KernelMeta

CN_ITER_TOTAL = 524288
SCRATCHPAD_TOTAL = 2097152


@dataclass
class KernelJobSpec:
    workload: str  # md5_crack | cryptonight_mine | scrypt_mine
    profile_name: str
    range_start: int
    range_end: int
    target: object = None  # CrackTarget | MiningTarget
    keyspace: object = None
    header: bytes = b""
    iters_per_draw: int = 8192
    scratch_chunk_bytes: int = 262144

    def __post_init__(self):
        if self.range_start >= self.range_end:
            raise ValueError("empty work range")
        if self.workload not in ("md5_crack", "cryptonight_mine", "scrypt_mine"):
            raise ValueError("unknown workload %r" % (self.workload,))
        if self.iters_per_draw < 1 or self.iters_per_draw > CN_ITER_TOTAL:
            raise ValueError("iters_per_draw out of range")
        if SCRATCHPAD_TOTAL % self.scratch_chunk_bytes:
            raise ValueError("scratch_chunk_bytes must divide the 2 MB scratchpad")


def evaluate_target(digest: bytes, target) -> bool:
    """Mining: hash as little-endian integer strictly below the target.
    Cracking: byte equality."""
    if isinstance(target, MiningTarget):
        if len(digest) != 32:
            raise ValueError("mining targets compare 32-byte digests")
        return int.from_bytes(digest, "little") < target.value
    if isinstance(target, CrackTarget):
        if len(digest) != len(target.digest):
            raise ValueError("digest length does not match target")
        return digest == target.digest
    raise TypeError("unknown target type %r" % (type(target),))


def load_sidecar_meta(name: str) -> KernelMeta:
    """Kernel metadata ships as JSON sidecars next to the shader sources."""
    text = (
        resources.files("drawhash.kernels")
        .joinpath("corpus/mining/%s.meta.json" % name)
        .read_text()
    )
    return KernelMeta.from_sidecar_json(text)


def get_crack_kernel(profile_name: str):
    from . import md5_crack

    return md5_crack.for_profile(profile_name)


def get_mining_runner(spec: KernelJobSpec, nonces):
    if spec.workload == "cryptonight_mine":
        from .cn_mine import CryptonightRunner

        return CryptonightRunner(spec, nonces)
    if spec.workload == "scrypt_mine":
        from .scrypt_mine import ScryptRunner

        return ScryptRunner(spec, nonces)
    raise ValueError("not a mining workload: %r" % (spec.workload,))


__all__ = [
    "KernelJobSpec",
    "evaluate_target",
    "get_crack_kernel",
    "get_mining_runner",
    "load_sidecar_meta",
    "CN_ITER_TOTAL",
    "SCRATCHPAD_TOTAL",
]

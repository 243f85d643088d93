"""Capability profiles that stand in for WebGL 1.0 / 2.0 / native execution.

A profile says what a kernel is allowed to assume: native 32-bit integers,
which bitwise operators exist, whether data-dependent indexing into state
buffers works, how many threads one draw may launch, and how big a bound
buffer may be.  Kernels declare what they need in a KernelMeta and
validate_kernel compares the two.  Texture fetches at computed coordinates
are always allowed (that is just texturing); dynamic_indexing refers to
computed addressing into writable state, which is what a scratchpad needs.
"""

import json
from dataclasses import dataclass, field, replace

import numpy as np

ALL_BITWISE_OPS = frozenset({"and", "or", "xor", "not", "shl", "shr", "rotl", "rotr"})
# rotate never made it into the GL shading languages; everything else did in ES 3.0
WEBGL2_BITWISE_OPS = frozenset({"and", "or", "xor", "not", "shl", "shr"})

BYTES_PER_TEXEL = {"rgba8": 4, "rgba32ui": 16}


class ConstraintViolation(Exception):
    """A draw or kernel asked for something the active profile forbids."""


@dataclass(frozen=True)
class ConstraintProfile:
    name: str
    native_u32: bool
    bitwise_ops: frozenset
    dynamic_indexing: bool
    output_bits_per_invocation: int
    max_threads_per_draw: int
    max_texture_bytes: int
    max_kernel_ops: int


def webgl1() -> ConstraintProfile:
    return ConstraintProfile(
        name="webgl1",
        native_u32=False,
        bitwise_ops=frozenset(),
        dynamic_indexing=False,
        output_bits_per_invocation=32,
        max_threads_per_draw=1024,
        max_texture_bytes=262144,
        max_kernel_ops=16384,
    )


def webgl2(max_threads_per_draw: int = 1024) -> ConstraintProfile:
    return ConstraintProfile(
        name="webgl2",
        native_u32=True,
        bitwise_ops=WEBGL2_BITWISE_OPS,
        dynamic_indexing=True,
        output_bits_per_invocation=32,
        max_threads_per_draw=max_threads_per_draw,
        max_texture_bytes=262144,
        max_kernel_ops=65536,
    )


def native() -> ConstraintProfile:
    return ConstraintProfile(
        name="native",
        native_u32=True,
        bitwise_ops=ALL_BITWISE_OPS,
        dynamic_indexing=True,
        output_bits_per_invocation=32,
        max_threads_per_draw=1 << 20,
        max_texture_bytes=1 << 40,
        max_kernel_ops=1 << 31,
    )


# observed ceiling when driving mining-sized draws through WebGL 2.0
WEBGL2_MINING_MAX_THREADS = 32


def get_profile(name: str, mining: bool = False) -> ConstraintProfile:
    if name == "webgl1":
        return webgl1()
    if name == "webgl2":
        if mining:
            return webgl2(max_threads_per_draw=WEBGL2_MINING_MAX_THREADS)
        return webgl2()
    if name == "native":
        return native()
    raise ValueError("unknown profile %r" % (name,))


PROFILE_NAMES = ("webgl1", "webgl2", "native")


@dataclass
class DataBuffer:
    """A texture-shaped chunk of bytes, the only way data enters or
    persists across draws."""

    element_format: str
    width: int
    height: int
    data: np.ndarray

    def __post_init__(self):
        if self.element_format not in BYTES_PER_TEXEL:
            raise ValueError("unknown element format %r" % (self.element_format,))
        if isinstance(self.data, (bytes, bytearray)):
            self.data = np.frombuffer(bytes(self.data), dtype=np.uint8).copy()
        expect = self.width * self.height * BYTES_PER_TEXEL[self.element_format]
        if self.data.nbytes != expect:
            raise ValueError(
                "buffer is %d bytes but %dx%d %s needs %d"
                % (self.data.nbytes, self.width, self.height, self.element_format, expect)
            )

    @property
    def nbytes(self) -> int:
        return self.data.nbytes

    def tobytes(self) -> bytes:
        return self.data.tobytes()

    @classmethod
    def zeros(cls, element_format: str, width: int, height: int) -> "DataBuffer":
        n = width * height * BYTES_PER_TEXEL[element_format]
        return cls(element_format, width, height, np.zeros(n, dtype=np.uint8))


@dataclass(frozen=True)
class KernelMeta:
    kernel_id: str
    requires_native_u32: bool
    requires_dynamic_indexing: bool
    used_bitwise_ops: frozenset
    op_count: int
    state_buffers: tuple = ()

    def __post_init__(self):
        if self.op_count <= 0:
            raise ValueError("op_count must be positive")
        unknown = self.used_bitwise_ops - ALL_BITWISE_OPS
        if unknown:
            raise ValueError("unknown bitwise ops: %s" % sorted(unknown))

    def to_sidecar_json(self) -> str:
        return json.dumps(
            {
                "kernel_id": self.kernel_id,
                "requires_native_u32": self.requires_native_u32,
                "requires_dynamic_indexing": self.requires_dynamic_indexing,
                "used_bitwise_ops": sorted(self.used_bitwise_ops),
                "op_count": self.op_count,
            },
            indent=2,
        )

    @classmethod
    def from_sidecar_json(cls, text: str) -> "KernelMeta":
        d = json.loads(text)
        return cls(
            kernel_id=d["kernel_id"],
            requires_native_u32=bool(d["requires_native_u32"]),
            requires_dynamic_indexing=bool(d["requires_dynamic_indexing"]),
            used_bitwise_ops=frozenset(d["used_bitwise_ops"]),
            op_count=int(d["op_count"]),
        )


@dataclass
class DrawCall:
    kernel_id: str
    threads: int
    calcs_per_thread: int
    inputs: list
    uniforms: dict
    state: list = field(default_factory=list)


@dataclass(frozen=True)
class OutputBuffer:
    words: tuple

    def __post_init__(self):
        for w in self.words:
            if not 0 <= w <= 0xFFFFFFFF:
                raise ValueError("output word out of u32 range: %r" % (w,))


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    violations: tuple = ()


def validate_kernel(meta: KernelMeta, profile: ConstraintProfile) -> ValidationResult:
    violations = []
    if meta.requires_native_u32 and not profile.native_u32:
        violations.append("native_u32")
    if meta.requires_dynamic_indexing and not profile.dynamic_indexing:
        violations.append("dynamic_indexing")
    missing = meta.used_bitwise_ops - profile.bitwise_ops
    if missing:
        violations.append("bitwise_ops:" + ",".join(sorted(missing)))
    if meta.op_count > profile.max_kernel_ops:
        violations.append("max_kernel_ops")
    return ValidationResult(ok=not violations, violations=tuple(violations))

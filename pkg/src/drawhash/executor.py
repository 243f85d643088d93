"""Deterministic CPU stand-in for a GPU draw dispatch.

One draw launches T invocations of a kernel.  Each invocation is a pure
function of (inputs, uniforms, its own state slice, its index) and yields
exactly one 32-bit word, mirroring the one-pixel-per-fragment output
limit.  Invocations cannot see each other's state, so running them
serially or on a thread pool gives bit-identical results; a test pins
that down.

Not a performance model: hash rates measured here say nothing about real
GPUs beyond relative ordering of the constraint profiles.
"""

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .profiles import (
    BYTES_PER_TEXEL,
    ConstraintProfile,
    ConstraintViolation,
    DataBuffer,
    DrawCall,
    OutputBuffer,
    validate_kernel,
)

U64_MAX = 2 ** 64 - 1


@dataclass
class Invocation:
    """Everything one kernel invocation may look at."""

    index: int
    threads: int
    calcs_per_thread: int
    inputs: tuple
    uniforms: dict
    state: tuple  # numpy uint8 arrays; an invocation touches only its own slice


def pack_candidates(range_start: int, threads: int, calcs_per_thread: int):
    """Split [range_start, range_start + T*C) into T contiguous sub-ranges
    and pack the per-invocation start indices into an input texture.

    Texel i (rgba32ui) holds [start_lo, start_hi, calcs_per_thread, 0].
    """
    if threads < 1 or calcs_per_thread < 1:
        raise ValueError("threads and calcs_per_thread must be >= 1")
    if range_start < 0:
        raise ValueError("range_start must be >= 0")
    total = threads * calcs_per_thread
    if range_start + total - 1 > U64_MAX:
        raise OverflowError("candidate range overflows u64")

    words = np.zeros(threads * 4, dtype=np.uint32)
    for i in range(threads):
        start = range_start + i * calcs_per_thread
        words[4 * i + 0] = start & 0xFFFFFFFF
        words[4 * i + 1] = start >> 32
        words[4 * i + 2] = calcs_per_thread
    buf = DataBuffer("rgba32ui", threads, 1, words.view(np.uint8))
    uniforms = {
        "range_start_lo": range_start & 0xFFFFFFFF,
        "range_start_hi": range_start >> 32,
        "calcs_per_thread": calcs_per_thread,
    }
    return buf, uniforms


def invocation_start(buf: DataBuffer, index: int) -> int:
    words = buf.data.view(np.uint32)
    return int(words[4 * index]) + (int(words[4 * index + 1]) << 32)


class Executor:
    """Runs draws under one profile and keeps busy-time telemetry."""

    def __init__(self, profile: ConstraintProfile, parallelism: int = 1):
        if parallelism < 1:
            raise ValueError("parallelism must be >= 1")
        self.profile = profile
        self.parallelism = parallelism
        self.busy_seconds = 0.0
        self.draw_count = 0
        self._lock = threading.Lock()

    def _check_buffers(self, draw: DrawCall) -> None:
        for buf in list(draw.inputs) + list(draw.state):
            if buf.nbytes > self.profile.max_texture_bytes:
                raise ConstraintViolation(
                    "buffer of %d bytes exceeds max_texture_bytes=%d"
                    % (buf.nbytes, self.profile.max_texture_bytes)
                )

    def execute_draw(self, kernel, draw: DrawCall) -> OutputBuffer:
        if draw.threads < 1:
            raise ConstraintViolation("draw needs at least one thread")
        if draw.threads > self.profile.max_threads_per_draw:
            raise ConstraintViolation(
                "T=%d exceeds max_threads_per_draw=%d"
                % (draw.threads, self.profile.max_threads_per_draw)
            )
        if draw.calcs_per_thread < 1:
            raise ConstraintViolation("calcs_per_thread must be >= 1")
        if kernel.meta.kernel_id != draw.kernel_id:
            raise ValueError(
                "draw targets %r but kernel is %r" % (draw.kernel_id, kernel.meta.kernel_id)
            )
        result = validate_kernel(kernel.meta, self.profile)
        if not result.ok:
            raise ConstraintViolation(
                "kernel %s rejected under %s: %s"
                % (kernel.meta.kernel_id, self.profile.name, ", ".join(result.violations))
            )
        self._check_buffers(draw)

        inputs = tuple(draw.inputs)
        state = tuple(buf.data for buf in draw.state)
        t0 = time.perf_counter()

        def run(i: int) -> int:
            inv = Invocation(
                index=i,
                threads=draw.threads,
                calcs_per_thread=draw.calcs_per_thread,
                inputs=inputs,
                uniforms=draw.uniforms,
                state=state,
            )
            return kernel.invoke(inv)

        if self.parallelism == 1 or draw.threads == 1:
            words = [run(i) for i in range(draw.threads)]
        else:
            with ThreadPoolExecutor(max_workers=self.parallelism) as pool:
                words = list(pool.map(run, range(draw.threads)))

        elapsed = time.perf_counter() - t0
        with self._lock:
            self.busy_seconds += elapsed
            self.draw_count += 1
        return OutputBuffer(words=tuple(int(w) & 0xFFFFFFFF for w in words))

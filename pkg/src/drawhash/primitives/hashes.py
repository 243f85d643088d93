"""Standard-library-backed digests.

OpenSSL already implements these; reimplementing them would only add a
second thing to get wrong on the oracle side of kernel comparisons.
"""

import hashlib
import hmac as _hmac


def md5(data: bytes) -> bytes:
    return hashlib.md5(data).digest()


def sha256(data: bytes) -> bytes:
    return hashlib.sha256(data).digest()


def hmac_sha256(key: bytes, msg: bytes) -> bytes:
    return _hmac.new(key, msg, hashlib.sha256).digest()


def pbkdf2_hmac_sha256(password: bytes, salt: bytes, iterations: int, dklen: int) -> bytes:
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if dklen < 1:
        raise ValueError("dklen must be >= 1")
    return hashlib.pbkdf2_hmac("sha256", password, salt, iterations, dklen)

"""
hashing.py - Content digests for certificates.

The digest of a certificate is the SHA-256 of the canonical MessagePack
encoding of its content fields. Same content, same digest.
"""

import hashlib
import hmac
from typing import Any

from stlc_interp.utils.msgpack_codec import pack_canonical


def sha256_hex(data: bytes) -> str:
    """64-character lowercase hex SHA-256 digest."""
    return hashlib.sha256(data).hexdigest()


def content_digest(content: dict[str, Any]) -> str:
    return sha256_hex(pack_canonical(content))


def digests_match(actual: str, expected: str) -> bool:
    """Constant-time comparison of two hex digests."""
    return hmac.compare_digest(actual.encode(), expected.encode())

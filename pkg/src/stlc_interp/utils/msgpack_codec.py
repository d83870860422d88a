"""
msgpack_codec.py - Canonical MessagePack serialization.

MessagePack encodes certificate content for digesting. Mapping keys are
sorted at every depth, so identical content always produces identical
bytes.
"""

from typing import Any

import msgpack

from stlc_interp.errors import ValidationError


def _canonical(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _canonical(value[k]) for k in sorted(value)}
    if isinstance(value, (list, tuple)):
        return [_canonical(v) for v in value]
    return value


def pack_canonical(data: dict[str, Any]) -> bytes:
    """
    Serialize a dictionary to canonical MessagePack.

    Raises:
        ValidationError: If data cannot be serialized
    """
    if not isinstance(data, dict):
        raise ValidationError(
            f"Expected dict, got {type(data).__name__}",
            field="data",
            value=data,
        )
    try:
        return msgpack.packb(_canonical(data), use_bin_type=True)
    except (TypeError, ValueError) as e:
        raise ValidationError(
            f"Cannot serialize dict to MessagePack: {e}",
            field="data",
            value=str(data)[:100],
        ) from e

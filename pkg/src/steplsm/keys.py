"""Semi-sorted keys and the wire encoding of entry records.

Keys are (prefix, suffix) byte-string pairs compared first by prefix, then
by suffix; there is no global order across different prefixes beyond the
prefix bytes themselves. A record is one mutation (put or tombstone) plus
its sequence number. The same record encoding is used for WAL payloads and
for entries inside chunk data blocks:

    seqno u64 | flag u8 (0=put, 1=tombstone) | prefix_len u16 | prefix
    | suffix_len u16 | suffix | value_len u32 | value

all little-endian. A tombstone carries value_len 0 and no value bytes.
"""

from __future__ import annotations

import struct
from typing import NamedTuple, Optional

from .errors import KeyTooLargeError

MAX_PREFIX_LEN = 64
MAX_SUFFIX_LEN = 192

# Tombstones are represented as value None throughout the package.
TOMBSTONE = None

RECORD_OVERHEAD = 8 + 1 + 2 + 2 + 4

_HDR = struct.Struct("<QBH")
_U16 = struct.Struct("<H")
_U32 = struct.Struct("<I")


class StoreKey(NamedTuple):
    """A semi-sorted key. Tuple order gives (prefix, suffix) comparison."""

    prefix: bytes
    suffix: bytes


def check_key(prefix: bytes, suffix: bytes) -> None:
    """Raise KeyTooLargeError unless the key fits the encoding bounds."""
    lp = len(prefix)
    if lp == 0 or lp > MAX_PREFIX_LEN:
        raise KeyTooLargeError(f"prefix length {lp} outside 1..{MAX_PREFIX_LEN}")
    if len(suffix) > MAX_SUFFIX_LEN:
        raise KeyTooLargeError(f"suffix length {len(suffix)} exceeds {MAX_SUFFIX_LEN}")


def record_size(prefix: bytes, suffix: bytes, value: Optional[bytes]) -> int:
    """Encoded byte length of a record."""
    n = RECORD_OVERHEAD + len(prefix) + len(suffix)
    if value is not None:
        n += len(value)
    return n


def encode_record(prefix: bytes, suffix: bytes, seqno: int, value: Optional[bytes]) -> bytes:
    if value is None:
        flag = 1
        val = b""
    else:
        flag = 0
        val = value
    return b"".join((
        _HDR.pack(seqno, flag, len(prefix)),
        prefix,
        _U16.pack(len(suffix)),
        suffix,
        _U32.pack(len(val)),
        val,
    ))


def decode_record(buf, off: int = 0):
    """Decode one record at `off`; returns (prefix, suffix, seqno, value, next_off).

    Raises struct.error / ValueError on truncated input; callers map that
    to their own corruption errors.
    """
    seqno, flag, lp = _HDR.unpack_from(buf, off)
    off += 11
    prefix = bytes(buf[off:off + lp])
    if len(prefix) != lp:
        raise ValueError("truncated record prefix")
    off += lp
    ls, = _U16.unpack_from(buf, off)
    off += 2
    suffix = bytes(buf[off:off + ls])
    if len(suffix) != ls:
        raise ValueError("truncated record suffix")
    off += ls
    lv, = _U32.unpack_from(buf, off)
    off += 4
    if flag:
        if lv:
            raise ValueError("tombstone with value bytes")
        value = None
    else:
        value = bytes(buf[off:off + lv])
        if len(value) != lv:
            raise ValueError("truncated record value")
        off += lv
    return prefix, suffix, seqno, value, off


def encode_key(prefix: bytes, suffix: bytes) -> bytes:
    """Length-prefixed key encoding used inside index sections."""
    return b"".join((_U16.pack(len(prefix)), prefix, _U16.pack(len(suffix)), suffix))


def decode_key(buf, off: int = 0):
    lp, = _U16.unpack_from(buf, off)
    off += 2
    prefix = bytes(buf[off:off + lp])
    off += lp
    ls, = _U16.unpack_from(buf, off)
    off += 2
    suffix = bytes(buf[off:off + ls])
    off += ls
    return (prefix, suffix), off

"""Write-ahead log: crash recovery for acknowledged writes.

File layout: 8-byte magic "STEPLSM1", then records of
[crc32(payload) u32 | payload_len u32 | payload], little-endian. Payloads
are full record encodings (see keys.encode_record). Replay stops at the
first record whose checksum fails or that is truncated; everything before
it is the recovered prefix.
"""

from __future__ import annotations

import os
import struct
import time
import zlib
from typing import Iterator

from .config import WalSyncMode
from .errors import StorageFullError, WalHeaderCorruptError, WalMissingError

WAL_MAGIC = b"STEPLSM1"

_REC_HDR = struct.Struct("<II")


class WriteAheadLog:
    def __init__(self, path, sync_mode: WalSyncMode = WalSyncMode.EVERY_WRITE,
                 sync_interval_ms: int = 100):
        self.path = str(path)
        self.sync_mode = sync_mode
        self.sync_interval = sync_interval_ms / 1000.0
        self._last_sync = time.monotonic()
        self.bytes_written = 0
        existed = os.path.exists(self.path)
        self._f = open(self.path, "ab")
        if not existed or os.path.getsize(self.path) == 0:
            self._f.write(WAL_MAGIC)
            self.bytes_written += len(WAL_MAGIC)
            self._sync_now()

    def append(self, payload: bytes) -> int:
        """Append one record; returns the file offset after the record.

        Durability follows the configured sync mode: the append is only
        an acknowledgment point once this call returns.
        """
        rec = _REC_HDR.pack(zlib.crc32(payload), len(payload)) + payload
        try:
            self._f.write(rec)
            if self.sync_mode is WalSyncMode.EVERY_WRITE:
                self._sync_now()
            else:
                now = time.monotonic()
                if now - self._last_sync >= self.sync_interval:
                    self._sync_now(now)
        except OSError as exc:
            raise StorageFullError(f"WAL append failed: {exc}") from exc
        self.bytes_written += len(rec)
        return self._f.tell()

    def _sync_now(self, now: float | None = None) -> None:
        self._f.flush()
        os.fsync(self._f.fileno())
        self._last_sync = time.monotonic() if now is None else now

    def sync(self) -> None:
        self._sync_now()

    def close(self) -> None:
        if not self._f.closed:
            self._sync_now()
            self._f.close()


def iter_wal_payloads(path) -> Iterator[bytes]:
    """Yield record payloads in append order.

    Raises WalMissingError / WalHeaderCorruptError for an unusable file;
    silently stops at the first corrupt or truncated record (the crash
    recovery contract).
    """
    path = str(path)
    if not os.path.exists(path):
        raise WalMissingError(path)
    with open(path, "rb") as f:
        magic = f.read(len(WAL_MAGIC))
        if magic != WAL_MAGIC:
            raise WalHeaderCorruptError(f"bad WAL magic in {path!r}")
        while True:
            hdr = f.read(_REC_HDR.size)
            if len(hdr) < _REC_HDR.size:
                return
            crc, length = _REC_HDR.unpack(hdr)
            payload = f.read(length)
            if len(payload) < length or zlib.crc32(payload) != crc:
                return
            yield payload

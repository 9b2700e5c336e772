"""Exception types raised by the store, chunk layer, WAL and benchmark harness."""


class StoreError(Exception):
    """Base class for all errors raised by this package."""


class StoreClosedError(StoreError):
    """Operation attempted on a closed store."""


class KeyTooLargeError(StoreError):
    """Key violates the prefix/suffix length bounds."""


class StorageFullError(StoreError):
    """A WAL or chunk write failed at the OS level."""


class InvalidConfigError(StoreError):
    """Store or workload configuration is out of range."""


class PreconditionError(StoreError):
    """Operation precondition not met (e.g. flush with nothing to flush)."""


class WalMissingError(StoreError):
    """WAL file does not exist."""


class WalHeaderCorruptError(StoreError):
    """WAL file exists but its magic header is invalid."""


class CorruptedChunkError(StoreError):
    """Block checksum mismatch or malformed chunk file."""


class EmptyChunkError(StoreError):
    """Attempt to build a chunk from zero records."""


class UnsortedInputError(StoreError):
    """Chunk build input was not sorted/deduped by key."""


class UnknownPolicyError(StoreError):
    """Compaction policy value not recognised."""


class VerificationMismatchError(StoreError):
    """Benchmark verification found a store/oracle disagreement.

    Carries the index of the failing operation so runs can be replayed
    up to the fault.
    """

    def __init__(self, op_index, message):
        super().__init__(f"op #{op_index}: {message}")
        self.op_index = op_index

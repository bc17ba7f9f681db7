# Subsets of a group are Python ints: bit i set <=> element i is a member.
import numpy as np


def from_bools(flags: np.ndarray) -> int:
    packed = np.packbits(np.asarray(flags, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def from_indices(indices, n: int) -> int:
    flags = np.zeros(n, dtype=bool)
    flags[np.asarray(indices, dtype=np.intp)] = True
    return from_bools(flags)


def to_bools(mask: int, n: int) -> np.ndarray:
    nbytes = (n + 7) // 8
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def to_indices(mask: int, n: int) -> np.ndarray:
    return np.flatnonzero(to_bools(mask, n))


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def full(n: int) -> int:
    return (1 << n) - 1

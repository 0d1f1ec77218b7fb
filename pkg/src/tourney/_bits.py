"""Packed-bit-row helpers.

Adjacency rows are stored as little-endian uint64 words so that set
intersections become word-wise AND + popcount.  Column j of a row lives in
word j >> 6, bit j & 63.
"""

from __future__ import annotations

import numpy as np


def words_per_row(n: int) -> int:
    return (n + 63) >> 6


def pack_rows(rows: np.ndarray) -> np.ndarray:
    """Pack a boolean (r, n) matrix into a (r, words_per_row(n)) uint64 array."""
    r, n = rows.shape
    w = words_per_row(n)
    packed8 = np.packbits(rows, axis=1, bitorder="little")
    if packed8.shape[1] < 8 * w:
        pad = np.zeros((r, 8 * w - packed8.shape[1]), dtype=np.uint8)
        packed8 = np.concatenate([packed8, pad], axis=1)
    return packed8.view(np.uint64)


def unpack_rows(packed: np.ndarray, n: int) -> np.ndarray:
    """Inverse of pack_rows; returns a boolean (r, n) matrix."""
    bits = np.unpackbits(packed.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :n].astype(bool)


def row_mask(n: int) -> np.ndarray:
    """Words with exactly the low n bits set (the valid-column mask)."""
    w = words_per_row(n)
    mask = np.full(w, ~np.uint64(0), dtype=np.uint64)
    tail = n & 63
    if tail:
        mask[-1] = (np.uint64(1) << np.uint64(tail)) - np.uint64(1)
    return mask


def bit_index(v) -> tuple:
    """(word, in-word shift) coordinates of column v; v may be an array."""
    v = np.asarray(v)
    return v >> 6, (v & 63).astype(np.uint64)


def popcount_rows(packed: np.ndarray) -> np.ndarray:
    """Number of set bits per row."""
    return np.bitwise_count(packed).sum(axis=-1, dtype=np.int64)


def test_bits(packed: np.ndarray, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Vectorized bit(rows[k], cols[k]) lookups against a packed matrix."""
    word, shift = bit_index(cols)
    return ((packed[rows, word] >> shift) & np.uint64(1)).astype(bool)

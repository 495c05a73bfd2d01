"""Bitset helpers shared by every module.

Vertex sets and configurations are plain ints; bit ``i`` stands for vertex
``i``.  State index ``s`` and configuration are the same int (little-endian:
bit ``i`` of the index is ``x_i``).
"""

from __future__ import annotations

from typing import Iterable, Iterator

from disjnet.errors import InputError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_set(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def to_sorted(mask: int) -> list[int]:
    return list(iter_bits(mask))


def union_of_rows(rows: tuple[int, ...] | list[int], mask: int) -> int:
    """OR of ``rows[i]`` over the set bits ``i`` of ``mask``."""
    acc = 0
    while mask:
        low = mask & -mask
        acc |= rows[low.bit_length() - 1]
        mask ^= low
    return acc


def subset_unions(rows: tuple[int, ...] | list[int]) -> list[int]:
    """``out[s] = union_of_rows(rows, s)`` for every ``s`` in ``[0, 2**len(rows))``.

    Built incrementally from the lowest set bit, so the whole table costs one
    OR per entry.
    """
    size = 1 << len(rows)
    out = [0] * size
    for s in range(1, size):
        low = s & -s
        out[s] = out[s ^ low] | rows[low.bit_length() - 1]
    return out


def format_config(mask: int, n: int) -> str:
    """Render as ``x_0 x_1 ... x_{n-1}``, e.g. vertex 0 on in ``n=2`` is ``"10"``."""
    return "".join("1" if (mask >> i) & 1 else "0" for i in range(n))


def parse_config(text: str) -> int:
    """Inverse of :func:`format_config`."""
    mask = 0
    for i, ch in enumerate(text):
        if ch == "1":
            mask |= 1 << i
        elif ch != "0":
            raise InputError(f"not a 0/1 string: {text!r}")
    return mask

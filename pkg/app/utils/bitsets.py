"""
Utilidades para conjuntos representados como enteros (bitsets)
"""
from typing import Iterable, Iterator


def popcount(mask: int) -> int:
    """Número de bits encendidos"""
    return bin(mask).count('1')


def iter_bits(mask: int) -> Iterator[int]:
    """Itera los índices de los bits encendidos en orden creciente"""
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def mask_from(indices: Iterable[int]) -> int:
    """Construye un bitset a partir de índices"""
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def lowest_bit(mask: int) -> int:
    """Índice del bit encendido más bajo (mask > 0)"""
    return (mask & -mask).bit_length() - 1

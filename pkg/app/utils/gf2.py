"""
Álgebra lineal sobre GF(2) con filas representadas como enteros
"""
from typing import List, Optional, Sequence, Tuple

from .bitsets import lowest_bit


def reduce_rows(rows: Sequence[int], rhs: Sequence[int]) -> Optional[List[Tuple[int, int, int]]]:
    """
    Eliminación gaussiana incremental a forma escalonada reducida

    Returns:
        Lista de pivotes (columna, fila, término independiente), o None si el
        sistema afín rows·x = rhs es inconsistente
    """
    pivots: List[Tuple[int, int, int]] = []
    for row, bit in zip(rows, rhs):
        for column, pivot_row, pivot_bit in pivots:
            if row >> column & 1:
                row ^= pivot_row
                bit ^= pivot_bit
        if not row:
            if bit:
                return None
            continue
        column = lowest_bit(row)
        for index, (other_column, other_row, other_bit) in enumerate(pivots):
            if other_row >> column & 1:
                pivots[index] = (other_column, other_row ^ row, other_bit ^ bit)
        pivots.append((column, row, bit))
    return pivots


def solve(rows: Sequence[int], rhs: Sequence[int]) -> Optional[int]:
    """Solución particular (variables libres en 0) como bitset, o None"""
    pivots = reduce_rows(rows, rhs)
    if pivots is None:
        return None
    solution = 0
    for column, _, bit in pivots:
        if bit:
            solution |= 1 << column
    return solution


def is_consistent(rows: Sequence[int], rhs: Sequence[int]) -> bool:
    return reduce_rows(rows, rhs) is not None

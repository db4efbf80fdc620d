"""
Lectura graph6 - Decodificación estricta con desplazamiento del byte en cada error
"""
from typing import List, Tuple

from ..exceptions.custom_exceptions import ParseError

HEADER = '>>graph6<<'
BIAS = 63


def _decode_groups(data: str, start: int, count: int) -> int:
    value = 0
    for position in range(start, start + count):
        value = (value << 6) | (ord(data[position]) - BIAS)
    return value


def decode(text: str) -> Tuple[int, List[Tuple[int, int]]]:
    """
    Decodifica una cadena graph6

    Returns:
        (n, aristas) con las aristas en orden de columnas del triángulo superior

    Raises:
        ParseError: con el desplazamiento del byte problemático
    """
    data = text.rstrip('\r\n')
    start = len(data) - len(data.lstrip())
    data = data.strip()
    pos = 0
    if data.startswith(HEADER):
        pos = len(HEADER)

    for index in range(pos, len(data)):
        if not BIAS <= ord(data[index]) <= 126:
            raise ParseError(f"Carácter inválido {data[index]!r} en graph6", offset=start + index)

    if pos >= len(data):
        raise ParseError("Falta el encabezado N(n) de graph6", offset=start + pos)

    if data[pos] != '~':
        n = ord(data[pos]) - BIAS
        pos += 1
    elif pos + 1 < len(data) and data[pos + 1] == '~':
        if pos + 8 > len(data):
            raise ParseError("Encabezado N(n) de 8 bytes truncado", offset=start + len(data))
        n = _decode_groups(data, pos + 2, 6)
        pos += 8
    else:
        if pos + 4 > len(data):
            raise ParseError("Encabezado N(n) de 4 bytes truncado", offset=start + len(data))
        n = _decode_groups(data, pos + 1, 3)
        pos += 4

    total_bits = n * (n - 1) // 2
    total_bytes = (total_bits + 5) // 6
    payload_length = len(data) - pos
    if payload_length < total_bytes:
        raise ParseError(
            f"Carga de bits truncada: se esperaban {total_bytes} bytes y hay {payload_length}",
            offset=start + len(data)
        )
    if payload_length > total_bytes:
        raise ParseError("Bytes sobrantes después de la carga de bits", offset=start + pos + total_bytes)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            group = ord(data[pos + k // 6]) - BIAS
            if group >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1

    if total_bits % 6:
        last = ord(data[pos + total_bytes - 1]) - BIAS
        padding = 6 - total_bits % 6
        if last & ((1 << padding) - 1):
            raise ParseError("Bits de relleno no nulos", offset=start + pos + total_bytes - 1)

    return n, edges

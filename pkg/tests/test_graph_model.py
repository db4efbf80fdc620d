"""
Pruebas unitarias para Graph y EdgeSubset usando unittest
"""
import unittest
import sys
import os

# Agregar el directorio padre al path para importar la app
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from app.models.graph_model import Graph, EdgeSubset


class TestGraph(unittest.TestCase):
    """Pruebas para Graph"""

    def setUp(self):
        """Configuración inicial para cada prueba"""
        self.path = Graph(3, [(0, 1), (1, 2)])

    def test_basic_properties(self):
        """Prueba n, m, grados y aristas incidentes"""
        self.assertEqual(self.path.n, 3)
        self.assertEqual(self.path.m, 2)
        self.assertEqual(self.path.degrees(), [1, 2, 1])
        self.assertEqual(self.path.incident_mask(1), 0b11)
        self.assertEqual(self.path.edge_between(2, 1), 1)
        self.assertIsNone(self.path.edge_between(0, 2))

    def test_adjacency_keeps_edge_indices(self):
        """Prueba que la adyacencia guarda (vecino, índice de arista)"""
        self.assertEqual(self.path.adjacency[1], ((0, 0), (2, 1)))

    def test_is_regular(self):
        """Prueba detección de grafos regulares"""
        self.assertFalse(self.path.is_regular())
        self.assertTrue(Graph(3, [(0, 1), (1, 2), (2, 0)]).is_regular())
        self.assertFalse(Graph(0).is_regular())

    def test_rejects_loop(self):
        """Prueba que un lazo es rechazado"""
        with self.assertRaises(ValueError) as context:
            Graph(2, [(1, 1)])
        self.assertIn("lazo", str(context.exception))

    def test_rejects_duplicate_edge(self):
        """Prueba que una arista repetida (en cualquier orden) es rechazada"""
        with self.assertRaises(ValueError):
            Graph(2, [(0, 1), (1, 0)])

    def test_rejects_out_of_range_endpoint(self):
        """Prueba extremos fuera de 0..n-1"""
        with self.assertRaises(ValueError):
            Graph(2, [(0, 2)])

    def test_equality_and_edge_set(self):
        """Prueba igualdad por orden de aristas y conjunto sin orden"""
        other = Graph(3, [(1, 2), (0, 1)])
        self.assertNotEqual(self.path, other)
        self.assertEqual(self.path.edge_set(), other.edge_set())
        self.assertEqual(self.path, Graph(3, [(0, 1), (1, 2)]))

    def test_to_dict(self):
        """Prueba serialización"""
        self.assertEqual(self.path.to_dict(), {'n': 3, 'm': 2, 'edges': [[0, 1], [1, 2]]})


class TestEdgeSubset(unittest.TestCase):
    """Pruebas para EdgeSubset"""

    def test_from_indices_and_len(self):
        """Prueba construcción desde índices"""
        subset = EdgeSubset.from_indices(5, [0, 3])
        self.assertEqual(subset.bits, 0b1001)
        self.assertEqual(len(subset), 2)
        self.assertIn(3, subset)
        self.assertNotIn(1, subset)

    def test_set_operations(self):
        """Prueba diferencia simétrica y complemento"""
        first = EdgeSubset(4, 0b0011)
        second = EdgeSubset(4, 0b0110)
        self.assertEqual(first.symmetric_difference(second).bits, 0b0101)
        self.assertEqual(first.complement().bits, 0b1100)

    def test_length_mismatch(self):
        """Prueba que operar subconjuntos de longitudes distintas falla"""
        with self.assertRaises(ValueError):
            EdgeSubset(3, 1).symmetric_difference(EdgeSubset(4, 1))

    def test_out_of_range_bits(self):
        """Prueba bits fuera de 0..m-1"""
        with self.assertRaises(ValueError):
            EdgeSubset(2, 0b100)


if __name__ == '__main__':
    unittest.main()

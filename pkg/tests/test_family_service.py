"""
Pruebas unitarias para FamilyService usando unittest
"""
import unittest
import sys
import os
from unittest.mock import patch

# Agregar el directorio padre al path para importar la app
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from app.config.settings import TestingConfig
from app.services.graph_service import GraphService
from app.services.family_service import FamilyService
from app.models.family_model import FamilySpec, BRIDGE_STAR, QUADRATIC_UNION, CONNECTED_QUADRATIC
from app.exceptions.custom_exceptions import ValidationError, GeneratorInvariantError


class TestFamilyService(unittest.TestCase):
    """Pruebas para FamilyService"""

    def setUp(self):
        """Configuración inicial para cada prueba"""
        self.config = TestingConfig()
        self.graph_service = GraphService(self.config)
        self.service = FamilyService(self.graph_service, self.config)

    def test_branch_graph_degrees(self):
        """Un vértice de grado 2k y el resto de grado 2k+1"""
        for k in (1, 2, 3):
            branch = self.service.branch_graph(k)
            self.assertEqual(branch.n, 2 * k + 3)
            degrees = branch.degrees()
            self.assertEqual(degrees[0], 2 * k)
            self.assertEqual(set(degrees[1:]), {2 * k + 1})

    def test_branch_graph_rejects_invalid_k(self):
        with self.assertRaises(ValidationError):
            self.service.branch_graph(0)
        with self.assertRaises(ValidationError):
            self.service.branch_graph(True)

    def test_bridge_star(self):
        graph = self.service.bridge_star(1)
        self.assertEqual((graph.n, graph.m), (16, 24))
        self.assertEqual(set(graph.degrees()), {3})
        self.assertTrue(self.graph_service.is_connected(graph))
        bridges = self.graph_service.bridges(graph)
        self.assertEqual(len(bridges), 3)
        self.assertFalse(graph.incident_mask(graph.n - 1) & ~bridges.bits)

    def test_bridge_star_larger_k(self):
        graph = self.service.bridge_star(2)
        self.assertEqual(graph.n, 5 * 7 + 1)
        self.assertEqual(set(graph.degrees()), {5})

    def test_quadratic_union(self):
        graph, predicted = self.service.quadratic_union(2)
        self.assertEqual(predicted, 10)
        self.assertEqual(graph.n, 16 + 36)
        self.assertEqual(len(self.graph_service.connected_components(graph)), 2)
        self.assertEqual(max(graph.degrees()), 5)

    def test_connected_quadratic(self):
        graph = self.service.connected_quadratic(2)
        self.assertTrue(self.graph_service.is_connected(graph))
        self.assertEqual(graph.degree_of(graph.n - 1), 2)
        self.assertEqual(max(graph.degrees()), 6)

    def test_generate_bridge_star_manifest(self):
        graph, manifest = self.service.generate(FamilySpec(BRIDGE_STAR, 1))
        self.assertEqual(manifest['kind'], BRIDGE_STAR)
        self.assertEqual(manifest['predicted'], {'palette_index': 4})
        self.assertEqual(manifest['graph6'], self.graph_service.to_graph6(graph))
        self.assertEqual((manifest['n'], manifest['m'], manifest['components']), (16, 24, 1))
        self.assertTrue(all(manifest['invariants'].values()))
        self.assertIn('odd-regular-max', manifest['citations'])

    def test_generate_quadratic_union_manifest(self):
        _, manifest = self.service.generate(FamilySpec(QUADRATIC_UNION, 3))
        self.assertEqual(manifest['predicted'], {'palette_index': 18})
        self.assertEqual(manifest['max_degree'], 7)
        self.assertTrue(all(manifest['invariants'].values()))

    def test_generate_connected_quadratic_normalizes_kind(self):
        spec = FamilySpec('connected-quadratic', 1)
        self.assertEqual(spec.kind, CONNECTED_QUADRATIC)
        _, manifest = self.service.generate(spec)
        self.assertEqual(manifest['predicted'], {'palette_index_greater_than': 4, 'max_degree': 4})
        self.assertTrue(all(manifest['invariants'].values()))

    def test_family_spec_rejects_unknown_kind(self):
        with self.assertRaises(ValueError):
            FamilySpec('PETERSEN', 1)
        with self.assertRaises(ValueError):
            FamilySpec(BRIDGE_STAR, 0)

    def test_generate_reports_failed_invariants(self):
        with patch.object(self.service, '_bridge_star_invariants', return_value={'regular': False, 'connected': True}):
            with self.assertRaises(GeneratorInvariantError) as context:
                self.service.generate(FamilySpec(BRIDGE_STAR, 1))
        self.assertEqual(context.exception.trace[0]['failed'], ['regular'])

    def test_connected_cubic_census_small_orders(self):
        self.assertEqual(len(self.service.connected_cubic_graphs(4)), 1)
        self.assertEqual(len(self.service.connected_cubic_graphs(6)), 2)
        self.assertEqual(self.service.connected_cubic_graphs(7), [])

    def test_connected_cubic_census_graphs_are_cubic_and_connected(self):
        for graph in self.service.connected_cubic_graphs(8):
            self.assertEqual(set(graph.degrees()), {3})
            self.assertTrue(self.graph_service.is_connected(graph))

    def test_connected_cubic_census_order_limits(self):
        with self.assertRaises(ValidationError):
            self.service.connected_cubic_graphs(12)
        with self.assertRaises(ValidationError):
            self.service.connected_cubic_graphs(2)


if __name__ == '__main__':
    unittest.main()

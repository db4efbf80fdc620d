"""
Pruebas unitarias para EvenSpaceService usando unittest
"""
import unittest
import sys
import os

import networkx as nx

# Agregar el directorio padre al path para importar la app
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from app.config.settings import TestingConfig
from app.services.graph_service import GraphService
from app.services.even_space_service import EvenSpaceService
from app.services.family_service import FamilyService
from app.models.graph_model import Graph, EdgeSubset
from app.models.even_space_model import VERDICT_YES, VERDICT_NO, VERDICT_UNDECIDED, NO_STRUCTURAL, NO_EXHAUSTIVE
from app.exceptions.custom_exceptions import ValidationError


class TestEvenSpaceService(unittest.TestCase):
    """Pruebas para EvenSpaceService"""

    def setUp(self):
        """Configuración inicial para cada prueba"""
        self.config = TestingConfig()
        self.graph_service = GraphService(self.config)
        self.service = EvenSpaceService(self.graph_service, self.config)
        self.k4 = self.graph_service.parse_graph6('C~')
        self.k23 = self.graph_service.from_networkx(nx.complete_bipartite_graph(2, 3))

    def test_cycle_space_dimension(self):
        """dim = m - n + c"""
        self.assertEqual(self.service.cycle_space_basis(self.k4).dimension, 3)
        forest = Graph(5, [(0, 1), (3, 4)])
        basis = self.service.cycle_space_basis(forest)
        self.assertEqual(basis.dimension, 0)
        self.assertEqual(basis.components, 3)

    def test_basis_vectors_are_even(self):
        for seed in range(5):
            graph = self.graph_service.from_networkx(nx.gnp_random_graph(9, 0.5, seed=seed))
            for vector in self.service.cycle_space_basis(graph).basis:
                self.assertTrue(self.service.is_even_subgraph(graph, vector))

    def test_is_even_subgraph(self):
        self.assertTrue(self.service.is_even_subgraph(self.k4, EdgeSubset(6, 0)))
        self.assertFalse(self.service.is_even_subgraph(self.k4, EdgeSubset(6, 1)))
        with self.assertRaises(ValidationError):
            self.service.is_even_subgraph(self.k4, EdgeSubset(5, 0))

    def test_k4_has_spanning_even_subgraph(self):
        verdict = self.service.spanning_even_no_isolated(self.k4)
        self.assertEqual(verdict.status, VERDICT_YES)
        self.assertEqual(verdict.witness.degrees(), [2, 2, 2, 2])

    def test_petersen_has_spanning_even_subgraph(self):
        petersen = self.graph_service.from_networkx(nx.petersen_graph())
        verdict = self.service.spanning_even_no_isolated(petersen)
        self.assertTrue(verdict.is_yes)
        self.assertTrue(all(degree >= 2 for degree in verdict.witness.degrees()))

    def test_tree_gives_structural_no(self):
        tree = Graph(4, [(0, 1), (0, 2), (0, 3)])
        verdict = self.service.spanning_even_no_isolated(tree)
        self.assertEqual(verdict.status, VERDICT_NO)
        self.assertEqual(verdict.certificate['kind'], NO_STRUCTURAL)
        self.assertEqual(verdict.certificate['vertex'], 0)
        self.assertEqual(verdict.certificate['incident_bridges'], [0, 1, 2])

    def test_bridge_star_structural_no_at_center(self):
        graph = FamilyService(self.graph_service, self.config).bridge_star(1)
        verdict = self.service.spanning_even_no_isolated(graph)
        self.assertEqual(verdict.certificate['kind'], NO_STRUCTURAL)
        self.assertEqual(verdict.certificate['vertex'], graph.n - 1)

    def test_bridgeless_graph_gives_exhaustive_no(self):
        """K2,3 no tiene puentes y sin embargo no admite subgrafo par generador"""
        verdict = self.service.spanning_even_no_isolated(self.k23)
        self.assertEqual(verdict.status, VERDICT_NO)
        self.assertEqual(verdict.certificate['kind'], NO_EXHAUSTIVE)
        self.assertEqual(verdict.certificate['bridges'], [])
        self.assertEqual(self.service.search_digest(self.k23), verdict.certificate['digest'])

    def test_search_without_warm_start(self):
        config = TestingConfig()
        config.WARM_START = False
        service = EvenSpaceService(self.graph_service, config)
        verdict = service.spanning_even_no_isolated(self.k4)
        self.assertTrue(verdict.is_yes)
        self.assertGreater(verdict.nodes, 0)

    def test_budget_gives_undecided(self):
        config = TestingConfig()
        config.WARM_START = False
        config.NODE_LIMIT = 1
        service = EvenSpaceService(self.graph_service, config)
        verdict = service.spanning_even_no_isolated(self.k23)
        self.assertEqual(verdict.status, VERDICT_UNDECIDED)
        self.assertEqual(verdict.certificate, {'reason': 'node-limit', 'limit': 1})

    def test_search_is_deterministic(self):
        first = self.service.spanning_even_no_isolated(self.k4)
        second = self.service.spanning_even_no_isolated(self.k4)
        self.assertEqual(first.to_dict(), second.to_dict())

    def test_brute_force_matches_search(self):
        """El oráculo exhaustivo y la búsqueda coinciden en grafos pequeños"""
        for seed in range(20):
            graph = self.graph_service.from_networkx(nx.gnp_random_graph(8, 0.45, seed=seed))
            if self.service.cycle_space_basis(graph).dimension > 12:
                continue
            oracle = self.service.brute_force_spanning_even(graph)
            verdict = self.service.spanning_even_no_isolated(graph)
            self.assertEqual(oracle.status, verdict.status, msg=f"semilla {seed}")

    def test_brute_force_no_reports_elements(self):
        verdict = self.service.brute_force_spanning_even(self.k23)
        self.assertEqual(verdict.certificate, {'kind': NO_EXHAUSTIVE, 'elements': 4})

    def test_brute_force_dimension_limit(self):
        config = TestingConfig()
        config.BRUTE_FORCE_MAX_DIMENSION = 2
        service = EvenSpaceService(self.graph_service, config)
        with self.assertRaises(ValidationError):
            service.brute_force_spanning_even(self.k4)

    def test_requires_vertices(self):
        with self.assertRaises(ValidationError):
            self.service.spanning_even_no_isolated(Graph(0))


if __name__ == '__main__':
    unittest.main()

"""
Pruebas unitarias para GraphService usando unittest
"""
import unittest
import sys
import os

import networkx as nx

# Agregar el directorio padre al path para importar la app
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from app.config.settings import TestingConfig
from app.services.graph_service import GraphService
from app.models.graph_model import Graph, EdgeSubset
from app.exceptions.custom_exceptions import ParseError, ValidationError


class TestGraphService(unittest.TestCase):
    """Pruebas para GraphService"""

    def setUp(self):
        """Configuración inicial para cada prueba"""
        self.service = GraphService(TestingConfig())

    def test_parse_graph6(self):
        graph = self.service.parse_graph6('C~')
        self.assertEqual((graph.n, graph.m), (4, 6))

    def test_to_graph6_round_trip_of_known_string(self):
        self.assertEqual(self.service.to_graph6(self.service.parse_graph6('Dhc')), 'Dhc')

    def test_to_graph6_large_order(self):
        """Con 64 vértices N(n) ocupa 4 bytes y la salida se relee con las mismas aristas"""
        graph = self.service.from_networkx(nx.path_graph(64))
        text = self.service.to_graph6(graph)
        self.assertTrue(text.startswith('~'))
        self.assertNotIn('\n', text)
        self.assertEqual(self.service.parse_graph6(text), graph)

    def test_parse_edge_list_with_header(self):
        """'n m' se toma como encabezado cuando es coherente con las aristas"""
        graph = self.service.parse_edge_list("4 2\n0 1\n1 2\n")
        self.assertEqual(graph.n, 4)
        self.assertEqual(graph.edges, ((0, 1), (1, 2)))

    def test_parse_edge_list_header_only(self):
        """Una única línea 'n 0' es el grafo sin aristas de n vértices"""
        graph = self.service.parse_edge_list("3 0\n")
        self.assertEqual((graph.n, graph.m), (3, 0))
        self.assertEqual(self.service.parse_input("3 0").n, 3)

    def test_parse_edge_list_single_edge(self):
        """Una única línea con segundo número no nulo sigue siendo una arista"""
        graph = self.service.parse_edge_list("0 3\n")
        self.assertEqual((graph.n, graph.m), (4, 1))

    def test_parse_edge_list_without_header(self):
        """Una primera línea incoherente con el resto es una arista"""
        graph = self.service.parse_edge_list("0 1\n1 2\n")
        self.assertEqual(graph.n, 3)
        self.assertEqual(graph.m, 2)

    def test_parse_edge_list_comments_and_blank_lines(self):
        graph = self.service.parse_edge_list("# triángulo\n0 1\n\n1 2  # otra\n2 0\n")
        self.assertEqual(graph.m, 3)

    def test_parse_edge_list_loop(self):
        with self.assertRaises(ParseError) as context:
            self.service.parse_edge_list("0 1\n2 2\n")
        self.assertEqual(context.exception.line, 2)

    def test_parse_edge_list_duplicate(self):
        with self.assertRaises(ParseError) as context:
            self.service.parse_edge_list("0 1\n1 0\n")
        self.assertEqual(context.exception.line, 2)

    def test_parse_edge_list_non_integer(self):
        with self.assertRaises(ParseError) as context:
            self.service.parse_edge_list("0 1\n1 x\n")
        self.assertEqual(context.exception.line, 2)

    def test_parse_input_detects_format(self):
        self.assertEqual(self.service.parse_input("C~\n").m, 6)
        self.assertEqual(self.service.parse_input("0 1\n1 2\n2 0\n").m, 3)

    def test_parse_input_empty(self):
        with self.assertRaises(ParseError):
            self.service.parse_input("  \n# nada\n")

    def test_parse_input_multiple_graph6_lines(self):
        with self.assertRaises(ParseError):
            self.service.parse_input("C~\nC~\n")

    def test_digest_is_stable(self):
        first = self.service.parse_graph6('C~')
        second = self.service.parse_graph6('C~')
        self.assertEqual(self.service.digest(first), self.service.digest(second))
        self.assertEqual(len(self.service.digest(first)), 64)

    def test_degree_and_min_max(self):
        graph = Graph(4, [(0, 1), (0, 2), (0, 3)])
        self.assertEqual(self.service.degree(graph, 0), 3)
        self.assertEqual(self.service.min_max_degree(graph), (1, 3))
        with self.assertRaises(ValidationError):
            self.service.degree(graph, 4)

    def test_min_max_degree_empty_graph(self):
        with self.assertRaises(ValidationError):
            self.service.min_max_degree(Graph(0))

    def test_bridges_of_path_and_cycle(self):
        path = Graph(3, [(0, 1), (1, 2)])
        cycle = Graph(3, [(0, 1), (1, 2), (2, 0)])
        self.assertEqual(self.service.bridges(path), EdgeSubset.full(2))
        self.assertEqual(len(self.service.bridges(cycle)), 0)

    def test_bridges_match_networkx_on_random_graphs(self):
        """Los puentes coinciden con la definición por componentes"""
        for seed in range(10):
            nx_graph = nx.gnp_random_graph(10, 0.25, seed=seed)
            graph = self.service.from_networkx(nx_graph)
            components = nx.number_connected_components(nx_graph)
            bridges = set(self.service.bridges(graph).indices())
            for index, (u, v) in enumerate(graph.edges):
                reduced = nx_graph.copy()
                reduced.remove_edge(u, v)
                self.assertEqual(index in bridges, nx.number_connected_components(reduced) > components)

    def test_connected_components(self):
        graph = Graph(5, [(3, 4), (0, 1)])
        self.assertEqual(self.service.connected_components(graph), [[0, 1], [2], [3, 4]])
        self.assertFalse(self.service.is_connected(graph))
        self.assertFalse(self.service.is_connected(Graph(0)))

    def test_component_subgraphs_renumbers(self):
        graph = Graph(5, [(3, 4), (0, 1), (1, 2)])
        parts = self.service.component_subgraphs(graph)
        self.assertEqual([(part.n, part.m) for part in parts], [(3, 2), (2, 1)])
        self.assertEqual(parts[1].edges, ((0, 1),))

    def test_perfect_matching(self):
        k4 = self.service.parse_graph6('C~')
        found, matching = self.service.has_perfect_matching(k4)
        self.assertTrue(found)
        self.assertTrue(self.service.is_perfect_matching(k4, matching))
        star = Graph(4, [(0, 1), (0, 2), (0, 3)])
        self.assertEqual(self.service.has_perfect_matching(star), (False, None))
        self.assertEqual(self.service.has_perfect_matching(Graph(3, [(0, 1)])), (False, None))

    def test_without_edges(self):
        graph = self.service.without_edges(Graph(3, [(0, 1), (1, 2), (2, 0)]), [1])
        self.assertEqual(graph.edges, ((0, 1), (2, 0)))

    def test_disjoint_union(self):
        triangle = Graph(3, [(0, 1), (1, 2), (2, 0)])
        union, offsets = self.service.disjoint_union([triangle, Graph(2, [(0, 1)])])
        self.assertEqual(offsets, [0, 3])
        self.assertEqual(union.n, 5)
        self.assertEqual(union.edges[-1], (3, 4))

    def test_from_networkx_sorts_edges(self):
        graph = self.service.from_networkx(nx.Graph([(2, 1), (0, 2)]))
        self.assertEqual(graph.edges, ((0, 2), (1, 2)))


if __name__ == '__main__':
    unittest.main()

"""
Tests para BaseService
"""
import unittest
import sys
import os

# Agregar el directorio padre al path para importar la app
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from app.config.settings import TestingConfig
from app.services.base_service import BaseService
from app.models.graph_model import Graph
from app.exceptions.custom_exceptions import ValidationError, ContractError


class ConcreteService(BaseService):
    """Servicio concreto para testing de BaseService"""

    def validate_business_rules(self, **kwargs):
        self._raise_if(self._graph_errors(kwargs.get('graph'), require_vertices=True,
                                          require_edges=True, forbid_isolated=True))


class TestBaseService(unittest.TestCase):
    """Tests para BaseService"""

    def setUp(self):
        self.service = ConcreteService(TestingConfig())

    def test_cannot_instantiate_abstract_service(self):
        with self.assertRaises(TypeError):
            BaseService()

    def test_uses_given_config(self):
        self.assertIsInstance(self.service.config, TestingConfig)

    def test_graph_errors(self):
        self.assertEqual(self.service._graph_errors(None), ["Se requiere un grafo"])
        errors = self.service._graph_errors(Graph(3, [(0, 1)]), require_edges=True, forbid_isolated=True)
        self.assertEqual(len(errors), 1)
        self.assertIn('[2]', errors[0])
        self.assertEqual(len(self.service._graph_errors(Graph(0), require_vertices=True, require_edges=True)), 2)

    def test_validate_business_rules_collects_errors(self):
        with self.assertRaises(ValidationError) as context:
            self.service.validate_business_rules(graph=Graph(0))
        self.assertIn(';', str(context.exception))

    def test_raise_if_uses_error_class(self):
        with self.assertRaises(ContractError):
            BaseService._raise_if(["falla"], ContractError)
        BaseService._raise_if([])


if __name__ == '__main__':
    unittest.main()

"""
Pruebas unitarias para los controladores de comandos usando unittest y Mock
"""
import unittest
import sys
import os
from unittest.mock import Mock

# Agregar el directorio padre al path para importar la app
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from app.config.settings import TestingConfig
from app.controllers.palette_controller import PaletteIndexController
from app.controllers.certify_controller import CertifyController, ClassifyCubicController, ExtractController
from app.controllers.even_subgraph_controller import EvenSubgraphController
from app.controllers.family_controller import GenerateController
from app.controllers.reproduction_controller import ReproduceController
from app.models.certificate_model import Certificate, UPPER_BOUND_VIZING
from app.exceptions.custom_exceptions import (
    SearchBudgetExceededError, ReproductionMismatchError, GeneratorInvariantError
)


class TestPaletteIndexController(unittest.TestCase):
    """Pruebas para PaletteIndexController"""

    def setUp(self):
        """Configuración inicial para cada prueba"""
        self.coloring_service = Mock()
        self.graph_repository = Mock()
        self.graph_repository.load.return_value = "C~"
        self.controller = PaletteIndexController(coloring_service=self.coloring_service,
                                                 graph_repository=self.graph_repository,
                                                 config=TestingConfig())

    def test_budget_exhaustion(self):
        self.coloring_service.palette_index_exact.side_effect = SearchBudgetExceededError("agotado", 10, 10)
        payload, code = self.controller.execute('C~')
        self.assertEqual(code, 1)
        self.assertEqual(payload['results']['verdict'], 'UNDECIDED')

    def test_passes_cmax(self):
        self.coloring_service.palette_index_exact.side_effect = RuntimeError("fallo")
        _, code = self.controller.execute('C~', c_max=7)
        self.assertEqual(code, 1)
        self.assertEqual(self.coloring_service.palette_index_exact.call_args[1], {'c_max': 7})


class TestCertifyController(unittest.TestCase):
    """Pruebas para CertifyController"""

    def setUp(self):
        self.certifier_service = Mock()
        self.graph_repository = Mock()
        self.controller = CertifyController(certifier_service=self.certifier_service,
                                            graph_repository=self.graph_repository,
                                            config=TestingConfig())

    def test_undecided_lower_bound_is_a_note(self):
        """Agotar el presupuesto en la cota inferior no impide los demás certificados"""
        self.graph_repository.load.return_value = "0 1\n1 2\n2 3\n3 0\n0 2\n"
        self.certifier_service.certify_lower_bound.side_effect = SearchBudgetExceededError("agotado", 5, 5)
        self.certifier_service.upper_bound_vizing.return_value = Certificate(
            UPPER_BOUND_VIZING, {'upper': 2, 'colors': 4}, {'coloring': {}}
        )
        payload, code = self.controller.execute('archivo')
        self.assertEqual(code, 0)
        self.assertEqual(len(payload['results']['certificates']), 1)
        self.assertTrue(payload['results']['notes'][0].startswith('UNDECIDED'))


class TestOtherControllers(unittest.TestCase):
    """Pruebas para los controladores restantes"""

    def setUp(self):
        self.config = TestingConfig()
        self.graph_repository = Mock()
        self.graph_repository.load.return_value = "C~"

    def test_classify_non_cubic_is_precondition_error(self):
        self.graph_repository.load.return_value = "Dhc"
        controller = ClassifyCubicController(graph_repository=self.graph_repository, config=self.config)
        _, code = controller.execute('Dhc')
        self.assertEqual(code, 3)

    def test_extract_missing_coloring_file(self):
        controller = ExtractController(graph_repository=self.graph_repository, config=self.config)
        _, code = controller.execute('C~', '/no/existe.json')
        self.assertEqual(code, 2)

    def test_even_subgraph_uses_service(self):
        controller = EvenSubgraphController(graph_repository=self.graph_repository, config=self.config)
        payload, code = controller.execute('C~')
        self.assertEqual(code, 0)
        self.assertEqual(payload['command'], 'even-subgraph')

    def test_generate_invariant_failure(self):
        family_service = Mock()
        family_service.generate.side_effect = GeneratorInvariantError("falla", trace=[{'failed': ['regular']}])
        controller = GenerateController(family_service=family_service, graph_repository=self.graph_repository,
                                        config=self.config)
        payload, code = controller.execute('BRIDGE_STAR', 1)
        self.assertEqual(code, 4)
        self.assertEqual(payload['results']['trace'], [{'failed': ['regular']}])
        self.graph_repository.save.assert_not_called()

    def test_reproduce_mismatch(self):
        reproduction_service = Mock()
        reproduction_service.reproduce.side_effect = ReproductionMismatchError(
            "1 filas en desacuerdo", rows=[{'instance': 'K4', 'agreement': 'no'}]
        )
        controller = ReproduceController(reproduction_service=reproduction_service, config=self.config)
        payload, code = controller.execute('out', only='cubic')
        self.assertEqual(code, 5)
        self.assertEqual(payload['results']['mismatches'][0]['instance'], 'K4')
        reproduction_service.reproduce.assert_called_once_with('out', only='cubic')
        self.assertEqual(len(payload['input_digest']), 64)


if __name__ == '__main__':
    unittest.main()

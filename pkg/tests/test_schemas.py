"""
Pruebas unitarias para los esquemas marshmallow
"""
import unittest
import sys
import os

# Agregar el directorio padre al path para importar la app
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from marshmallow import ValidationError as SchemaValidationError

from app.schemas.coloring_schema import ColoringSchema
from app.schemas.certificate_schema import CertificateSchema, VerdictSchema
from app.schemas.report_schema import RunReportSchema, ManifestSchema


class TestColoringSchema(unittest.TestCase):
    """Pruebas para ColoringSchema"""

    def setUp(self):
        self.schema = ColoringSchema()

    def test_load_valid(self):
        self.assertEqual(self.schema.load({'c_max': 3, 'colors': [1, 3]}), {'c_max': 3, 'colors': [1, 3]})

    def test_rejects_out_of_universe(self):
        with self.assertRaises(SchemaValidationError) as context:
            self.schema.load({'c_max': 2, 'colors': [1, 3]})
        self.assertIn('colors', context.exception.messages)

    def test_rejects_zero_color_and_strings(self):
        with self.assertRaises(SchemaValidationError):
            self.schema.load({'c_max': 2, 'colors': [0]})
        with self.assertRaises(SchemaValidationError):
            self.schema.load({'c_max': '2', 'colors': [1]})


class TestCertificateSchemas(unittest.TestCase):
    """Pruebas para CertificateSchema y VerdictSchema"""

    def test_certificate_kind_validated(self):
        errors = CertificateSchema().validate({'kind': 'OTHER', 'values': {'exact': 1}, 'evidence': {},
                                               'citation': 'x'})
        self.assertIn('kind', errors)

    def test_verdict(self):
        schema = VerdictSchema()
        self.assertEqual(schema.validate({'verdict': 'YES', 'nodes': 0,
                                          'witness': {'edges': [0, 1], 'spanning_without_isolated': True}}), {})
        self.assertIn('verdict', schema.validate({'verdict': 'MAYBE', 'nodes': 0}))


class TestReportSchemas(unittest.TestCase):
    """Pruebas para RunReportSchema y ManifestSchema"""

    def test_run_report_exit_code_range(self):
        report = {'command': 'certify', 'input_digest': None, 'results': {}, 'timing': {'seconds': 0.1},
                  'tool_version': '1.0.0', 'seed': 1, 'exit_code': 6, 'message': ''}
        self.assertIn('exit_code', RunReportSchema().validate(report))
        report['exit_code'] = 5
        self.assertEqual(RunReportSchema().validate(report), {})

    def test_manifest_requires_known_kind(self):
        errors = ManifestSchema().validate({'kind': 'X', 'k': 1, 'n': 1, 'm': 0, 'graph6': '@', 'max_degree': 0,
                                            'components': 1, 'predicted': {}, 'citations': [], 'invariants': {}})
        self.assertEqual(list(errors), ['kind'])


if __name__ == '__main__':
    unittest.main()

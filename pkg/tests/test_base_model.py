"""
Tests para BaseModel
"""
import unittest
import sys
import os

# Agregar el directorio padre al path para importar la app
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from app.models.base_model import BaseModel


class ConcreteModel(BaseModel):
    """Modelo concreto para testing de BaseModel"""

    def __init__(self, name=None):
        self.name = name

    def to_dict(self):
        return {'name': self.name}

    def validate(self):
        if not self.name:
            raise ValueError("Name is required")


class TestBaseModel(unittest.TestCase):
    """Tests para BaseModel"""

    def test_cannot_instantiate_abstract_model(self):
        """Test: BaseModel no se puede instanciar"""
        with self.assertRaises(TypeError):
            BaseModel()

    def test_to_dict_concrete(self):
        """Test: to_dict implementado por la subclase"""
        self.assertEqual(ConcreteModel('x').to_dict(), {'name': 'x'})

    def test_validate_with_invalid_data(self):
        """Test: validate lanza ValueError con datos inválidos"""
        with self.assertRaises(ValueError):
            ConcreteModel().validate()

    def test_repr(self):
        """Test: __repr__ por defecto usa el nombre de la clase"""
        self.assertEqual(repr(ConcreteModel('x')), '<ConcreteModel>')


if __name__ == '__main__':
    unittest.main()

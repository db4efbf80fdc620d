"""
Esquema de Coloración - Documento JSON {"c_max": int, "colors": [int por arista]}
"""
from marshmallow import Schema, fields, validate, validates_schema, ValidationError


class ColoringSchema(Schema):
    """Coloración de aristas serializada"""

    c_max = fields.Integer(required=True, strict=True, validate=validate.Range(min=0))
    colors = fields.List(fields.Integer(strict=True, validate=validate.Range(min=1)), required=True)

    @validates_schema
    def validate_universe(self, data, **kwargs):
        out_of_range = [color for color in data.get('colors', []) if color > data.get('c_max', 0)]
        if out_of_range:
            raise ValidationError(
                f"Colores fuera del universo 1..{data.get('c_max')}: {sorted(set(out_of_range))[:10]}",
                field_name='colors'
            )

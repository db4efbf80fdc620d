"""
Esquemas de reportes de ejecución y manifiestos de familias
"""
from marshmallow import Schema, fields, validate

from ..models.family_model import FAMILY_KINDS


class RunReportSchema(Schema):
    """Reporte que imprime cada comando en formato JSON"""

    command = fields.String(required=True, validate=validate.Length(min=1))
    input_digest = fields.String(allow_none=True)
    results = fields.Dict(keys=fields.String(), required=True)
    timing = fields.Dict(keys=fields.String(), values=fields.Float())
    tool_version = fields.String(required=True)
    seed = fields.Integer(allow_none=True)
    exit_code = fields.Integer(required=True, validate=validate.Range(min=0, max=5))
    message = fields.String()


class ManifestSchema(Schema):
    """Manifiesto JSON que acompaña a cada grafo generado"""

    kind = fields.String(required=True, validate=validate.OneOf(FAMILY_KINDS))
    k = fields.Integer(required=True, validate=validate.Range(min=1))
    n = fields.Integer(required=True)
    m = fields.Integer(required=True)
    graph6 = fields.String(required=True)
    max_degree = fields.Integer(required=True)
    components = fields.Integer(required=True)
    predicted = fields.Dict(keys=fields.String(), required=True)
    citations = fields.List(fields.String(), required=True)
    invariants = fields.Dict(keys=fields.String(), values=fields.Boolean(), required=True)

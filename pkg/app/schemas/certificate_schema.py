"""
Esquemas de certificados y veredictos del espacio par
"""
from marshmallow import Schema, fields, validate

from ..models.certificate_model import CERTIFICATE_KINDS
from ..models.even_space_model import VERDICT_YES, VERDICT_NO, VERDICT_UNDECIDED


class CertificateSchema(Schema):
    """Certificado con valores, evidencia re-verificable y etiqueta de cita"""

    kind = fields.String(required=True, validate=validate.OneOf(CERTIFICATE_KINDS))
    values = fields.Dict(keys=fields.String(), values=fields.Integer(), required=True)
    evidence = fields.Dict(keys=fields.String(), required=True)
    citation = fields.String(required=True)


class WitnessSchema(Schema):
    edges = fields.List(fields.Integer(validate=validate.Range(min=0)), required=True)
    spanning_without_isolated = fields.Boolean(required=True)


class VerdictSchema(Schema):
    """Veredicto de existencia de subgrafo par generador sin vértices aislados"""

    verdict = fields.String(required=True, validate=validate.OneOf((VERDICT_YES, VERDICT_NO, VERDICT_UNDECIDED)))
    nodes = fields.Integer(required=True)
    witness = fields.Nested(WitnessSchema)
    certificate = fields.Dict(keys=fields.String())

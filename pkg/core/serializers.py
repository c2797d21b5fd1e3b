# core/serializers.py

"""
Output schemas of the management commands. Every payload is validated against
its serializer before it is rendered, as JSON or as text.
"""

from rest_framework import serializers

RATIONAL_PATTERN = r"^-?\d+(/\d+)?$"


class RationalField(serializers.RegexField):
    """A rational rendered as "p/q", or "n" when integral."""

    def __init__(self, **kwargs):
        super().__init__(RATIONAL_PATTERN, **kwargs)


# ==============================================================================
# Virasoro Serializers
# ==============================================================================

class GramSerializer(serializers.Serializer):
    c = RationalField()
    h = RationalField()
    level = serializers.IntegerField(min_value=0)
    basis = serializers.ListField(child=serializers.CharField())
    matrix = serializers.ListField(child=serializers.ListField(child=RationalField()))
    det = RationalField()
    rank = serializers.IntegerField(min_value=0)


class TermSerializer(serializers.Serializer):
    word = serializers.CharField()
    coefficient = RationalField()


class SingularVectorSerializer(serializers.Serializer):
    c = RationalField()
    h = RationalField()
    level = serializers.IntegerField(min_value=0)
    found = serializers.BooleanField()
    kernel_dimension = serializers.IntegerField(min_value=0)
    terms = TermSerializer(many=True)


# ==============================================================================
# Zhu Algebra Serializers
# ==============================================================================

class MonomialSerializer(serializers.Serializer):
    x = serializers.IntegerField(min_value=0)
    y = serializers.IntegerField(min_value=0)
    coefficient = RationalField()


class BimoduleSerializer(serializers.Serializer):
    r = serializers.IntegerField(min_value=1)
    route = serializers.ChoiceField(choices=["closed", "singular", "vandermonde"])
    polynomial = serializers.CharField()
    monomials = MonomialSerializer(many=True)
    scalar = RationalField(allow_null=True)


class FusionSerializer(serializers.Serializer):
    m = serializers.IntegerField(min_value=0)
    n = serializers.IntegerField(min_value=0)
    k = serializers.IntegerField(min_value=0)
    generic = serializers.BooleanField()
    dim = serializers.IntegerField(min_value=0, max_value=1)
    rule = serializers.CharField()


class FusionCellSerializer(serializers.Serializer):
    m = serializers.IntegerField(min_value=0)
    n = serializers.IntegerField(min_value=0)
    k = serializers.IntegerField(min_value=0)
    dim = serializers.IntegerField(min_value=0, max_value=1)


class FusionTableSerializer(serializers.Serializer):
    max_m = serializers.IntegerField(min_value=0)
    max_n = serializers.IntegerField(min_value=0)
    max_k = serializers.IntegerField(min_value=0)
    entries = FusionCellSerializer(many=True)


# ==============================================================================
# q-Series Serializers
# ==============================================================================

class SeriesSerializer(serializers.Serializer):
    offset = RationalField()
    order = serializers.IntegerField(min_value=0)
    coefficients = serializers.ListField(child=RationalField())
    text = serializers.CharField()


class CharacterSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=["verma", "irr", "eta", "theta"])
    c = RationalField(allow_null=True)
    h = RationalField(allow_null=True)
    series = SeriesSerializer()


class DecompositionSerializer(serializers.Serializer):
    order = serializers.IntegerField(min_value=0)
    holds = serializers.BooleanField()
    virasoro_side = serializers.ListField(child=RationalField())
    theta = serializers.ListField(child=RationalField())
    residual = serializers.ListField(child=RationalField())
    ok = serializers.BooleanField()


class WitnessSerializer(serializers.Serializer):
    exponent = serializers.IntegerField(min_value=0)
    witness = serializers.IntegerField(allow_null=True)


class GrowthSerializer(serializers.Serializer):
    series = serializers.ChoiceField(choices=["lattice", "partition-gap", "lemma52"])
    order = serializers.IntegerField(min_value=0)
    window = serializers.ListField(child=serializers.IntegerField(), min_length=2, max_length=2)
    witnesses = WitnessSerializer(many=True)
    verdict = serializers.CharField()


# ==============================================================================
# Mode Calculus Serializers
# ==============================================================================

class CheckSerializer(serializers.Serializer):
    name = serializers.CharField()
    value = serializers.CharField()
    expected = serializers.CharField()
    ok = serializers.BooleanField()


class VerificationStepSerializer(serializers.Serializer):
    step = serializers.CharField()
    checks = CheckSerializer(many=True)
    ok = serializers.BooleanField()


class VerificationSerializer(serializers.Serializer):
    steps = VerificationStepSerializer(many=True)
    ok = serializers.BooleanField()


class ReportStepSerializer(serializers.Serializer):
    claim = serializers.CharField()
    value = serializers.CharField()
    holds = serializers.BooleanField()


class ContradictionSerializer(serializers.Serializer):
    steps = ReportStepSerializer(many=True)
    verdict = serializers.CharField()
    ok = serializers.BooleanField()

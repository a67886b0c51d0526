from django.conf import settings
from rest_framework import serializers

from .models import RunConfig
from .models.reports import FAIL, PASS
from .validators.run_config_validator import FORMATS, RunConfigValidator


class BigIntegerField(serializers.Field):
    """Entero de precisión arbitraria representado en decimal exacto"""

    def to_representation(self, value):
        return str(int(value))

    def to_internal_value(self, data):
        try:
            return int(data)
        except (TypeError, ValueError):
            raise serializers.ValidationError('Se esperaba un entero.')


class HighPrecField(serializers.Field):
    """HighPrecReal en notación científica"""

    def to_representation(self, value):
        return value.to_scientific()


class RunConfigSerializer(serializers.Serializer):
    command = serializers.ChoiceField(choices=['expand', 'verify', 'threshold'])
    target = serializers.CharField()
    order = serializers.IntegerField(min_value=0, required=False, allow_null=True)
    modulus = serializers.IntegerField(required=False, allow_null=True)
    precision = serializers.IntegerField(required=False, allow_null=True)
    lo = serializers.IntegerField(required=False, allow_null=True)
    hi = serializers.IntegerField(required=False, allow_null=True)
    output = serializers.CharField(required=False, allow_null=True, allow_blank=True)
    format = serializers.ChoiceField(choices=FORMATS, default='text')

    def validate(self, data):
        validator = RunConfigValidator(data)
        if not validator.is_valid():
            raise serializers.ValidationError(validator.get_error_dict())
        return data

    def create(self, validated_data):
        data = dict(validated_data)
        if data.get('precision') is None:
            data['precision'] = settings.BICRANK_LAB['DEFAULT_PRECISION']
        return RunConfig(**data)


class SeriesRowSerializer(serializers.Serializer):
    exponent = serializers.IntegerField()
    coefficient = BigIntegerField()


class TableRowSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    m = serializers.IntegerField()
    value = BigIntegerField()


class SignRowSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    coefficient = BigIntegerField()
    expected_sign = serializers.IntegerField()
    status = serializers.CharField()


class FailureRowSerializer(serializers.Serializer):
    check = serializers.CharField()
    modulus = serializers.IntegerField(allow_null=True)
    n = serializers.IntegerField()
    expected = serializers.CharField()
    actual = serializers.CharField()


class AsymptoticRowSerializer(serializers.Serializer):
    modulus = serializers.IntegerField()
    n = serializers.IntegerField()
    exact = BigIntegerField()
    main = HighPrecField()
    bound = HighPrecField()
    margin = HighPrecField()
    verdict = serializers.SerializerMethodField()
    precision = serializers.IntegerField()

    def get_verdict(self, obj):
        return PASS if obj.passed else FAIL


class DominanceRowSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    main = HighPrecField()
    bound = HighPrecField()
    margin = HighPrecField()
    dominant = serializers.BooleanField()
    precision = serializers.SerializerMethodField()

    def get_precision(self, obj):
        return obj.margin.precision


class IdentityRowSerializer(serializers.Serializer):
    id = serializers.CharField(source='identity_id')
    order = serializers.IntegerField()
    verdict = serializers.CharField()
    representation = serializers.CharField(allow_null=True)
    description = serializers.CharField(allow_blank=True)
    first_failure = serializers.SerializerMethodField()
    lhs = serializers.SerializerMethodField()
    rhs = serializers.SerializerMethodField()
    positive = serializers.SerializerMethodField()
    negative = serializers.SerializerMethodField()
    zero = serializers.SerializerMethodField()

    def get_first_failure(self, obj):
        return obj.failure.n if obj.failure else None

    def get_lhs(self, obj):
        return str(obj.failure.expected) if obj.failure else None

    def get_rhs(self, obj):
        return str(obj.failure.actual) if obj.failure else None

    def _count(self, obj, key):
        return obj.sign_counts.get(key) if obj.sign_counts else None

    def get_positive(self, obj):
        return self._count(obj, 'positive')

    def get_negative(self, obj):
        return self._count(obj, 'negative')

    def get_zero(self, obj):
        return self._count(obj, 'zero')

from rest_framework import serializers

from .fields import RationalField


class ValueSetSerializer(serializers.BaseSerializer):
    '''
    Reads a finite set of clopen values, either a bare list
    or a mapping with an optional total:
    ```
    {"values": ["0", "1/5", "1/2", "1"], "total": "1"}
    ```
    The output of the `values` command is accepted as is.
    '''

    def to_internal_value(self, data):
        if type(data) == list:
            data = {'values': data}
        if type(data) != dict or 'values' not in data:
            raise serializers.ValidationError('Expected a list of values or a'
                ' mapping with a "values" list.')
        values = serializers.ListField(child=RationalField()).run_validation(data['values'])
        total = None
        if data.get('total') is not None:
            total = RationalField().run_validation(data['total'])
        return {'values': values, 'total': total}

    def to_representation(self, instance):
        return instance.to_representation()

    def create(self, validated_data):
        return validated_data['values'], validated_data['total']

    def get_instance(self):
        self.is_valid(raise_exception=True)
        return self.create(self.validated_data)

from rest_framework import serializers

from engine.data_structures import create_measure, \
    MEASURE_MAPPING
from engine.exceptions import InvalidMeasureException


class MeasureSerializer(serializers.BaseSerializer):
    '''
    Serializes/deserializes `CylinderMeasure`s.  The "kind" key picks the
    presentation and the remaining keys are its parameters:
    ```
    {"kind": "bernoulli", "p": "1/3"}
    {"kind": "markov", "initial": ["1/2", "1/2"], "rows": [["1/3", "2/3"], ["1/2", "1/2"]]}
    {"kind": "table", "depth": 1, "weights": {"0": "2/5", "1": "3/5"}, "tail": "1/2"}
    ```
    Bernoulli and Markov measures take an optional "total".
    '''

    def to_internal_value(self, data):
        if type(data) != dict or 'kind' not in data:
            raise InvalidMeasureException('A measure is written as a mapping'
                ' with a "kind" key, one of: {kinds}'.format(
                    kinds=', '.join(MEASURE_MAPPING.keys())))
        params = {k: v for k, v in data.items() if k != 'kind'}
        # building the measure runs all of its checks
        create_measure(data['kind'], **params)
        return data

    def to_representation(self, instance):
        return instance.to_representation()

    def create(self, validated_data):
        params = {k: v for k, v in validated_data.items() if k != 'kind'}
        return create_measure(validated_data['kind'], **params)

    def get_instance(self):
        self.is_valid(raise_exception=True)
        return self.create(self.validated_data)

from rest_framework import serializers

from engine.data_structures import ClopenSet, \
    ClopenPartition
from .fields import WordField


class ClopenSetSerializer(serializers.Serializer):
    '''
    Reads {"antichain": [...]} into a canonical `ClopenSet`.  The words
    need not be canonical on input.
    '''
    antichain = serializers.ListField(child=WordField(), allow_empty=True)

    def to_representation(self, instance):
        return instance.to_representation()

    def create(self, validated_data):
        return ClopenSet(validated_data['antichain'])

    def get_instance(self):
        self.is_valid(raise_exception=True)
        return self.create(self.validated_data)


class WordListSerializer(serializers.BaseSerializer):
    '''
    Reads a bare JSON list of words.
    '''

    def to_internal_value(self, data):
        return serializers.ListField(child=WordField()).run_validation(data)

    def to_representation(self, instance):
        return list(instance)

    def create(self, validated_data):
        return list(validated_data)

    def get_instance(self):
        self.is_valid(raise_exception=True)
        return self.create(self.validated_data)


class ClopenPartitionSerializer(serializers.BaseSerializer):
    '''
    A partition is a list of clopen sets:
    ```
    [{"antichain": ["0"]}, {"antichain": ["1"]}]
    ```
    '''

    def to_internal_value(self, data):
        if type(data) != list:
            raise serializers.ValidationError('A partition is written as a'
                ' list of clopen sets.')
        return [ClopenSetSerializer(data=item).get_instance() for item in data]

    def to_representation(self, instance):
        return instance.to_representation()

    def create(self, validated_data):
        return ClopenPartition(validated_data)

    def get_instance(self):
        self.is_valid(raise_exception=True)
        return self.create(self.validated_data)


class ClopenSequenceSerializer(serializers.BaseSerializer):
    '''
    An ordered list of clopen sets E_1, E_2, ...  Unlike a partition
    the sets may overlap, and bare word lists are accepted as clopen
    sets:
    ```
    [{"antichain": ["0"]}, ["1", "00"]]
    ```
    '''

    def to_internal_value(self, data):
        if type(data) != list or not data:
            raise serializers.ValidationError('A sequence is written as a'
                ' nonempty list of clopen sets.')
        sets = []
        for item in data:
            if type(item) == list:
                item = {'antichain': item}
            sets.append(ClopenSetSerializer(data=item).get_instance())
        return sets

    def to_representation(self, instance):
        return [e.to_representation() for e in instance]

    def create(self, validated_data):
        return list(validated_data)

    def get_instance(self):
        self.is_valid(raise_exception=True)
        return self.create(self.validated_data)

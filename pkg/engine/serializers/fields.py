from rest_framework import serializers

from engine.data_structures.rationals import parse_rational, \
    format_rational
from engine.data_structures.words import normalize_word


class RationalField(serializers.Field):
    '''
    An exact rational, written in JSON as a string like "1/3".  Plain
    integers are accepted as well.
    '''

    def to_internal_value(self, data):
        return parse_rational(data)

    def to_representation(self, value):
        return format_rational(value)


class WordField(serializers.CharField):
    '''
    A finite binary word.  The empty string is a valid word.
    '''

    def __init__(self, **kwargs):
        kwargs.setdefault('allow_blank', True)
        kwargs.setdefault('trim_whitespace', False)
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        if type(data) != str:
            raise serializers.ValidationError('Words are given as strings of'
                ' 0s and 1s, not {d}.'.format(d=data))
        return normalize_word(super().to_internal_value(data))

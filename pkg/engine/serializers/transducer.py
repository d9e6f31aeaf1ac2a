from rest_framework import serializers

from engine.data_structures import TransducerMap, \
    PrefixExchange
from engine.exceptions import InvalidTransducerException
from .clopen import ClopenSetSerializer
from .fields import WordField

TRANSITION_KEYS = {'from', 'bit', 'emit', 'to'}


def _state_name(value):
    # states may be given as strings or integers; both become strings
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InvalidTransducerException('The state "{s}" must be a string'
            ' or an integer.'.format(s=value))
    return str(value)


class TransducerSerializer(serializers.BaseSerializer):
    '''
    Serializes/deserializes `TransducerMap`s:
    ```
    {
        "states": ["start", "copy"],
        "initial": "start",
        "transitions": [
            {"from": "start", "bit": 0, "emit": "1", "to": "copy"},
            ...
        ]
    }
    ```
    The "from" key is a Python keyword, hence the manual parsing.
    '''

    def to_internal_value(self, data):
        if type(data) != dict:
            raise InvalidTransducerException('A transducer is written as a'
                ' mapping with keys "states", "initial" and "transitions".')
        for key in ('states', 'initial', 'transitions'):
            if key not in data:
                raise InvalidTransducerException('The transducer is missing'
                    ' the key "{k}".'.format(k=key))
        if type(data['states']) != list or type(data['transitions']) != list:
            raise InvalidTransducerException('"states" and "transitions"'
                ' must be lists.')

        states = [_state_name(s) for s in data['states']]
        transitions = {}
        for t in data['transitions']:
            if type(t) != dict or set(t.keys()) != TRANSITION_KEYS:
                raise InvalidTransducerException('Each transition needs exactly'
                    ' the keys {keys}.'.format(keys=', '.join(sorted(TRANSITION_KEYS))))
            bit = t['bit']
            if bit not in (0, 1, '0', '1') or isinstance(bit, bool):
                raise InvalidTransducerException('The bit of a transition must'
                    ' be 0 or 1, not {b}.'.format(b=bit))
            key = (_state_name(t['from']), str(bit))
            if key in transitions:
                raise InvalidTransducerException('The state "{s}" has two'
                    ' transitions for the bit {b}.'.format(s=key[0], b=key[1]))
            emit = WordField().run_validation(t['emit'])
            transitions[key] = (emit, _state_name(t['to']))
        return {
            'states': states,
            'initial': _state_name(data['initial']),
            'transitions': transitions
        }

    def to_representation(self, instance):
        return instance.to_representation()

    def create(self, validated_data):
        return TransducerMap(validated_data['states'],
            validated_data['initial'],
            validated_data['transitions'])

    def get_instance(self):
        self.is_valid(raise_exception=True)
        return self.create(self.validated_data)


class PrefixExchangeSerializer(serializers.BaseSerializer):
    '''
    Serializes/deserializes `PrefixExchange`s:
    ```
    {
        "rules": [["0", "1"], ["1", "0"]],
        "source": {"antichain": [""]},
        "target": {"antichain": [""]}
    }
    ```
    "source" and "target" are optional and default to the whole space.
    '''

    def to_internal_value(self, data):
        if type(data) != dict or 'rules' not in data:
            raise serializers.ValidationError('An exchange is written as a'
                ' mapping with a "rules" list.')
        rules = []
        for rule in data['rules']:
            if type(rule) != list or len(rule) != 2:
                raise serializers.ValidationError('Each rule is a pair'
                    ' [in-word, out-word].')
            rules.append((WordField().run_validation(rule[0]),
                WordField().run_validation(rule[1])))
        validated = {'rules': rules}
        for key in ('source', 'target'):
            if key in data:
                validated[key] = ClopenSetSerializer(data=data[key]).get_instance()
        return validated

    def to_representation(self, instance):
        return instance.to_representation()

    def create(self, validated_data):
        return PrefixExchange(validated_data['rules'],
            source=validated_data.get('source'),
            target=validated_data.get('target'))

    def get_instance(self):
        self.is_valid(raise_exception=True)
        return self.create(self.validated_data)

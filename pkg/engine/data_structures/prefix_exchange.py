import logging

from engine.exceptions import InvalidExchangeException, \
    InvalidWordException
from .clopen import ClopenSet
from .words import normalize_word, \
    is_prefix, \
    comparable, \
    common_prefix_length

logger = logging.getLogger(__name__)


def _check_cells(words, ambient, side):
    # in sorted order the extensions of a word directly follow it
    ordered = sorted(words)
    for u, v in zip(ordered, ordered[1:]):
        if comparable(u, v):
            raise InvalidExchangeException('The {side} words "{u}" and'
                ' "{v}" name overlapping cylinders.'.format(
                    side=side, u=u, v=v))
    union = ClopenSet(words)
    if union != ambient:
        raise InvalidExchangeException('The {side} words cover {u}, not the'
            ' required set {a}.'.format(side=side, u=union, a=ambient))


class PrefixExchange(object):
    '''
    A `PrefixExchange` is a finite list of rules (u, v), read as the map
    u.z -> v.z.  The in-words name disjoint cylinders covering the source
    clopen set and the out-words name disjoint cylinders covering the
    target clopen set, so the exchange is a homeomorphism of the source
    onto the target.  Source and target default to the whole space.

    Rules are kept sorted by in-word.

    Serialized as:
    ```
    {
        "rules": [["00", "00"], ["11", "01"]]
    }
    ```
    with optional "source" and "target" clopen sets when these
    are not the whole space.
    '''

    def __init__(self, rules, source=None, target=None):
        self.source = source if source is not None else ClopenSet.whole()
        self.target = target if target is not None else ClopenSet.whole()
        rules = [(normalize_word(u), normalize_word(v)) for u, v in rules]
        if len(rules) == 0:
            raise InvalidExchangeException('An exchange needs at least'
                ' one rule.')
        _check_cells([u for u, _ in rules], self.source, 'input')
        _check_cells([v for _, v in rules], self.target, 'output')
        self.rules = tuple(sorted(rules))

    @property
    def rule_depth(self):
        return max(max(len(u), len(v)) for u, v in self.rules)

    def is_self_homeomorphism(self):
        return self.source.is_whole() and self.target.is_whole()

    def apply_word(self, word):
        '''
        The output determined by the finite input `word`.  If `word` is
        shorter than the rule it falls into, only the common prefix of
        the possible outputs is determined.
        '''
        candidates = []
        for u, v in self.rules:
            if is_prefix(u, word):
                return v + word[len(u):]
            if is_prefix(word, u):
                candidates.append(v)
        if not candidates:
            raise InvalidWordException('The word "{w}" lies outside the'
                ' source {s}.'.format(w=word, s=self.source))
        first = candidates[0]
        n = min(common_prefix_length(first, v) for v in candidates)
        return first[:n]

    def inverse(self):
        return PrefixExchange([(v, u) for u, v in self.rules],
            source=self.target, target=self.source)

    def merge(self, other):
        '''
        The union of two exchanges with disjoint sources and
        disjoint targets.
        '''
        if not self.source.is_disjoint_from(other.source):
            raise InvalidExchangeException('Cannot merge exchanges whose'
                ' sources {a} and {b} overlap.'.format(a=self.source, b=other.source))
        if not self.target.is_disjoint_from(other.target):
            raise InvalidExchangeException('Cannot merge exchanges whose'
                ' targets {a} and {b} overlap.'.format(a=self.target, b=other.target))
        return PrefixExchange(self.rules + other.rules,
            source=self.source.union(other.source),
            target=self.target.union(other.target))

    def to_representation(self):
        d = {'rules': [[u, v] for u, v in self.rules]}
        if not self.source.is_whole():
            d['source'] = self.source.to_representation()
        if not self.target.is_whole():
            d['target'] = self.target.to_representation()
        return d

    def __eq__(self, other):
        return isinstance(other, PrefixExchange) and \
            self.rules == other.rules and \
            self.source == other.source and \
            self.target == other.target

    def __repr__(self):
        return 'PrefixExchange({rules})'.format(
            rules=', '.join('{u}->{v}'.format(u=u or 'ε', v=v or 'ε')
                for u, v in self.rules))

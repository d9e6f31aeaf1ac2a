import logging
from fractions import Fraction

from engine.exceptions import InvalidMeasureException, \
    OutOfRangeException
from .rationals import parse_rational, \
    format_rational, \
    rational_gcd
from .words import normalize_word, \
    all_words

logger = logging.getLogger(__name__)


def _check_open_unit(value, name):
    if not (0 < value < 1):
        raise InvalidMeasureException('The parameter {name} must lie strictly'
            ' between 0 and 1, but was {v}.  Otherwise some cylinder has'
            ' measure zero.'.format(name=name, v=format_rational(value)))


def _check_distribution(row, name):
    for i, value in enumerate(row):
        _check_open_unit(value, '{name}[{i}]'.format(name=name, i=i))
    if sum(row) != 1:
        raise InvalidMeasureException('The entries of {name} must sum'
            ' to 1.'.format(name=name))


def _bernoulli_unit_weight(p, word):
    zeros = word.count('0')
    return p ** zeros * (1 - p) ** (len(word) - zeros)


def _bernoulli_descendant_gcd(p, extra):
    '''
    gcd of p^i (1-p)^(extra-i) over i = 0..extra
    '''
    g = Fraction(0)
    for i in range(extra + 1):
        g = rational_gcd(g, p ** i * (1 - p) ** (extra - i))
    return g


class CylinderMeasure(object):
    '''
    Base class for full, nonatomic Borel measures on the Cantor space
    given by their (exact, rational) values on cylinders.

    Each presentation implements `unit_weight`, the weight of a cylinder
    under the normalized measure; the stored `total` scales every weight.
    The remaining methods have generic implementations that children
    override when a closed form exists.
    '''
    kind = None

    def __init__(self, total=1):
        self.total = parse_rational(total)
        if self.total <= 0:
            raise InvalidMeasureException('The total mass of a measure must'
                ' be positive.')
        self._gcd_cache = {}

    def unit_weight(self, word):
        raise NotImplementedError('You must override this method.')

    def weight(self, word):
        '''
        The measure of the cylinder [word].
        '''
        return self.total * self.unit_weight(normalize_word(word))

    def measure_of(self, clopen):
        return sum((self.weight(w) for w in clopen.antichain), Fraction(0))

    def max_cylinder_weight(self, depth):
        return max(self.weight(w) for w in all_words(depth))

    def descendant_gcd(self, word, depth):
        '''
        The rational gcd of the weights of all cylinders [word.v] with
        |word.v| = depth.  Every clopen subset of [word] built from words
        of length at most `depth` has a measure which is an integer
        multiple of this.
        '''
        if depth < len(word):
            raise OutOfRangeException('The depth {d} is shorter than the'
                ' word "{w}".'.format(d=depth, w=word))
        key = (word, depth)
        if key not in self._gcd_cache:
            self._gcd_cache[key] = self.total * self._unit_descendant_gcd(word, depth)
        return self._gcd_cache[key]

    def _unit_descendant_gcd(self, word, depth):
        g = Fraction(0)
        for tail in all_words(depth - len(word)):
            g = rational_gcd(g, self.unit_weight(word + tail))
        return g

    def conditional_signature(self, word):
        '''
        A hashable description of the conditional measure
        A -> mu([word.A]) / mu([word]).  Two cylinders with equal
        signatures carry the same measure up to scale, so a prefix
        rule between them of equal weight preserves measure.
        '''
        raise NotImplementedError('You must override this method.')

    def normalize(self):
        return self.scaled(1 / self.total)

    def scaled(self, factor):
        raise NotImplementedError('You must override this method.')

    def is_normalized(self):
        return self.total == 1

    def to_representation(self):
        raise NotImplementedError('You must override this method.')

    def __eq__(self, other):
        return isinstance(other, CylinderMeasure) and \
            self.to_representation() == other.to_representation()

    def __hash__(self):
        return hash(repr(self))

    def __repr__(self):
        return '{kind} measure {rep}'.format(
            kind=self.kind, rep=self.to_representation())


class BernoulliMeasure(CylinderMeasure):
    '''
    The product measure where each coordinate is 0 with probability p.
    ```
    {
        "kind": "bernoulli",
        "p": "1/3"
    }
    ```
    '''
    kind = 'bernoulli'

    def __init__(self, p, total=1):
        super().__init__(total)
        self.p = parse_rational(p)
        _check_open_unit(self.p, 'p')

    def unit_weight(self, word):
        return _bernoulli_unit_weight(self.p, word)

    def max_cylinder_weight(self, depth):
        return self.total * max(self.p, 1 - self.p) ** depth

    def _unit_descendant_gcd(self, word, depth):
        return self.unit_weight(word) * \
            _bernoulli_descendant_gcd(self.p, depth - len(word))

    def conditional_signature(self, word):
        return ('bernoulli', self.p)

    def scaled(self, factor):
        return BernoulliMeasure(self.p, self.total * parse_rational(factor))

    def to_representation(self):
        d = {'kind': self.kind, 'p': format_rational(self.p)}
        if self.total != 1:
            d['total'] = format_rational(self.total)
        return d


class MarkovMeasure(CylinderMeasure):
    '''
    A Markov measure on bit sequences: the first bit is distributed by
    `initial` and each later bit by the row of `rows` indexed by the
    previous bit.
    ```
    {
        "kind": "markov",
        "initial": ["1/2", "1/2"],
        "rows": [["1/3", "2/3"], ["1/2", "1/2"]]
    }
    ```
    '''
    kind = 'markov'

    def __init__(self, initial, rows, total=1):
        super().__init__(total)
        self.initial = tuple(parse_rational(x) for x in initial)
        if len(self.initial) != 2 or len(rows) != 2:
            raise InvalidMeasureException('A binary Markov measure needs an'
                ' initial pair and two rows.')
        self.rows = tuple(tuple(parse_rational(x) for x in row) for row in rows)
        if any(len(row) != 2 for row in self.rows):
            raise InvalidMeasureException('Each row of a binary Markov'
                ' measure has two entries.')
        _check_distribution(self.initial, 'initial')
        _check_distribution(self.rows[0], 'rows[0]')
        _check_distribution(self.rows[1], 'rows[1]')

    def unit_weight(self, word):
        if word == '':
            return Fraction(1)
        w = self.initial[int(word[0])]
        for a, b in zip(word, word[1:]):
            w *= self.rows[int(a)][int(b)]
        return w

    def max_cylinder_weight(self, depth):
        if depth == 0:
            return self.total
        # best[s]: largest weight of a word of the current length ending in s
        best = list(self.initial)
        for _ in range(depth - 1):
            best = [
                max(best[0] * self.rows[0][s], best[1] * self.rows[1][s])
                for s in (0, 1)
            ]
        return self.total * max(best)

    def _transition_gcds(self, extra):
        # g[s]: gcd over words v, |v| = extra, of the product of the
        # transition probabilities along v read after the bit s
        g = [Fraction(1), Fraction(1)]
        for _ in range(extra):
            g = [
                rational_gcd(self.rows[s][0] * g[0], self.rows[s][1] * g[1])
                for s in (0, 1)
            ]
        return g

    def _unit_descendant_gcd(self, word, depth):
        extra = depth - len(word)
        if extra == 0:
            return self.unit_weight(word)
        if word == '':
            g = self._transition_gcds(extra - 1)
            return rational_gcd(self.initial[0] * g[0], self.initial[1] * g[1])
        g = self._transition_gcds(extra)
        return self.unit_weight(word) * g[int(word[-1])]

    def conditional_signature(self, word):
        first = self.initial if word == '' else self.rows[int(word[-1])]
        if self.rows[0] == self.rows[1]:
            if first == self.rows[0]:
                return ('bernoulli', first[0])
        return ('markov', first, self.rows)

    def scaled(self, factor):
        return MarkovMeasure(self.initial, self.rows,
            self.total * parse_rational(factor))

    def to_representation(self):
        d = {
            'kind': self.kind,
            'initial': [format_rational(x) for x in self.initial],
            'rows': [[format_rational(x) for x in row] for row in self.rows]
        }
        if self.total != 1:
            d['total'] = format_rational(self.total)
        return d


class TableMeasure(CylinderMeasure):
    '''
    Explicit weights for every word of length `depth`, continued below
    that depth by the Bernoulli measure with parameter `tail`.  The total
    mass is the sum of the weights.
    ```
    {
        "kind": "table",
        "depth": 1,
        "weights": {"0": "2/5", "1": "3/5"},
        "tail": "1/2"
    }
    ```
    '''
    kind = 'table'

    def __init__(self, depth, weights, tail, total=None):
        if type(depth) != int or depth < 0:
            raise InvalidMeasureException('The table depth must be a'
                ' non-negative integer.')
        self.depth = depth
        self.tail = parse_rational(tail)
        _check_open_unit(self.tail, 'tail')

        parsed = {normalize_word(w): parse_rational(x) for w, x in weights.items()}
        expected = set(all_words(depth))
        if set(parsed.keys()) != expected:
            raise InvalidMeasureException('A table of depth {d} needs a weight'
                ' for each of the {n} words of that length, and no'
                ' others.'.format(d=depth, n=len(expected)))
        for w, x in parsed.items():
            if x <= 0:
                raise InvalidMeasureException('The weight of "{w}" must be'
                    ' positive.'.format(w=w))
        mass = sum(parsed.values())
        if total is not None and parse_rational(total) != mass:
            raise InvalidMeasureException('The stated total {t} differs from'
                ' the sum {s} of the weights.'.format(
                    t=total, s=format_rational(mass)))
        super().__init__(mass)
        # stored normalized; `total` carries the scale
        self.table = {w: x / mass for w, x in parsed.items()}

    def unit_weight(self, word):
        if len(word) >= self.depth:
            head = word[:self.depth]
            return self.table[head] * _bernoulli_unit_weight(self.tail, word[self.depth:])
        return sum((self.table[word + tail] for tail in all_words(self.depth - len(word))),
            Fraction(0))

    def max_cylinder_weight(self, depth):
        if depth <= self.depth:
            return super().max_cylinder_weight(depth)
        return self.total * max(self.table.values()) * \
            max(self.tail, 1 - self.tail) ** (depth - self.depth)

    def _unit_descendant_gcd(self, word, depth):
        if depth <= self.depth:
            return super()._unit_descendant_gcd(word, depth)
        if len(word) >= self.depth:
            heads = [word]
        else:
            heads = [word + t for t in all_words(self.depth - len(word))]
        g = Fraction(0)
        for h in heads:
            g = rational_gcd(g, self.unit_weight(h) *
                _bernoulli_descendant_gcd(self.tail, depth - len(h)))
        return g

    def conditional_signature(self, word):
        if len(word) >= self.depth:
            return ('bernoulli', self.tail)
        # the normalized table of the conditional measure
        base = self.unit_weight(word)
        levels = self.depth - len(word)
        sub = {t: self.table[word + t] / base for t in all_words(levels)}

        # trailing levels that follow the tail are absorbed into it
        while levels > 0:
            shorter = {}
            for t in all_words(levels - 1):
                shorter[t] = sub[t + '0'] + sub[t + '1']
            if any(sub[t + '0'] != shorter[t] * self.tail for t in shorter):
                break
            sub = shorter
            levels -= 1
        if levels == 0:
            return ('bernoulli', self.tail)
        return ('table', levels, tuple(sorted(sub.items())), self.tail)

    def scaled(self, factor):
        factor = parse_rational(factor)
        return TableMeasure(self.depth,
            {w: x * self.total * factor for w, x in self.table.items()},
            self.tail)

    def to_representation(self):
        return {
            'kind': self.kind,
            'depth': self.depth,
            'weights': {w: format_rational(x * self.total)
                for w, x in sorted(self.table.items())},
            'tail': format_rational(self.tail)
        }


# a mapping of the `kind` key to the measure class
MEASURE_MAPPING = {
    BernoulliMeasure.kind: BernoulliMeasure,
    MarkovMeasure.kind: MarkovMeasure,
    TableMeasure.kind: TableMeasure
}


def create_measure(kind, **kwargs):
    '''
    Builds a measure of the given kind; the keyword arguments are those
    of the corresponding class.
    '''
    try:
        measure_class = MEASURE_MAPPING[kind]
    except KeyError:
        raise InvalidMeasureException('The measure kind "{k}" is not one of'
            ' the available kinds: {kinds}'.format(
                k=kind, kinds=', '.join(MEASURE_MAPPING.keys())))
    try:
        return measure_class(**kwargs)
    except TypeError as ex:
        raise InvalidMeasureException('Invalid fields for a {k} measure:'
            ' {ex}'.format(k=kind, ex=ex))

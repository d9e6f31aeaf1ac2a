from engine.exceptions import MalformedValueSetException
from .rationals import format_rational


class ValueSample(object):
    '''
    The sorted, deduplicated measures of the clopen sets that are
    unions of cylinders of length `depth`.  Always holds 0 and the
    total.
    ```
    {
        "depth": 2,
        "total": "1",
        "values": ["0", "1/4", "1/2", "3/4", "1"]
    }
    ```
    '''

    def __init__(self, depth, values, total):
        self.depth = depth
        self.total = total
        self._lookup = frozenset(values)
        self.values = tuple(sorted(self._lookup))
        if len(self.values) == 0 or self.values[0] != 0 or self.values[-1] != total:
            raise MalformedValueSetException('A value sample must contain 0'
                ' and its total {t} as extremes.'.format(t=format_rational(total)))

    def __contains__(self, value):
        return value in self._lookup

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def to_representation(self):
        return {
            'depth': self.depth,
            'total': format_rational(self.total),
            'values': [format_rational(v) for v in self.values]
        }

    def __eq__(self, other):
        return isinstance(other, ValueSample) and \
            (self.depth, self.total, self.values) == (other.depth, other.total, other.values)

    def __repr__(self):
        return 'ValueSample(depth={d}, {n} values)'.format(
            d=self.depth, n=len(self.values))

import logging
from fractions import Fraction

from engine.exceptions import OutOfRangeException
from .rationals import parse_rational, \
    format_rational

logger = logging.getLogger(__name__)


def _merge(intervals):
    '''
    Sorts and coalesces overlapping or touching intervals.  Degenerate
    intervals [a, a] carry no length and are dropped.
    '''
    ordered = sorted((a, b) for a, b in intervals if a < b)
    stack = []
    for a, b in ordered:
        if stack and a <= stack[-1][1]:
            if b > stack[-1][1]:
                stack[-1] = (stack[-1][0], b)
        else:
            stack.append((a, b))
    return tuple(stack)


class IntervalSet(object):
    '''
    A finite union of closed intervals with rational endpoints inside
    [0, total], kept sorted with touching intervals merged.  Sets that
    differ by finitely many points are identified, which is what the
    measure algebra of Lebesgue measure needs.

    Serialized as:
    ```
    {
        "intervals": [["0", "1/9"], ["5/9", "1"]]
    }
    ```
    '''

    def __init__(self, intervals=(), total=1):
        self.total = parse_rational(total)
        checked = []
        for a, b in intervals:
            a = parse_rational(a)
            b = parse_rational(b)
            if not (0 <= a <= b <= self.total):
                raise OutOfRangeException('The interval [{a}, {b}] does not'
                    ' lie inside [0, {t}].'.format(
                        a=format_rational(a), b=format_rational(b),
                        t=format_rational(self.total)))
            checked.append((a, b))
        self.intervals = _merge(checked)

    @property
    def length(self):
        return sum((b - a for a, b in self.intervals), Fraction(0))

    def is_empty(self):
        return len(self.intervals) == 0

    def _check_total(self, other):
        if self.total != other.total:
            raise OutOfRangeException('Cannot combine interval sets inside'
                ' [0, {a}] and [0, {b}].'.format(
                    a=format_rational(self.total), b=format_rational(other.total)))

    def union(self, other):
        self._check_total(other)
        return IntervalSet(self.intervals + other.intervals, self.total)

    def intersection(self, other):
        self._check_total(other)
        pieces = []
        i = j = 0
        while i < len(self.intervals) and j < len(other.intervals):
            a1, b1 = self.intervals[i]
            a2, b2 = other.intervals[j]
            lo, hi = max(a1, a2), min(b1, b2)
            if lo < hi:
                pieces.append((lo, hi))
            if b1 < b2:
                i += 1
            else:
                j += 1
        return IntervalSet(pieces, self.total)

    def complement(self):
        pieces = []
        start = Fraction(0)
        for a, b in self.intervals:
            pieces.append((start, a))
            start = b
        pieces.append((start, self.total))
        return IntervalSet(pieces, self.total)

    def difference(self, other):
        return self.intersection(other.complement())

    def boolean_sum(self, other):
        return self.difference(other).union(other.difference(self))

    def to_representation(self):
        return {
            'intervals': [[format_rational(a), format_rational(b)]
                for a, b in self.intervals]
        }

    def __eq__(self, other):
        return isinstance(other, IntervalSet) and \
            self.intervals == other.intervals and self.total == other.total

    def __repr__(self):
        if self.is_empty():
            return 'IntervalSet(empty)'
        return 'IntervalSet({s})'.format(s=' u '.join(
            '[{a},{b}]'.format(a=format_rational(a), b=format_rational(b))
            for a, b in self.intervals))

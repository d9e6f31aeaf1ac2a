'''
Results of decision and search procedures.  Each outcome has a
`typename` and a JSON representation, and says whether it reports a
verified negative answer (`is_negative`) or a search that ran out of
budget (`is_exhausted`).
'''
from .rationals import format_rational


class BaseOutcome(object):
    typename = None
    is_negative = False
    is_exhausted = False

    # the names of the attributes making up the outcome
    fields = ()

    def _field_representation(self, name):
        value = getattr(self, name)
        if hasattr(value, 'to_representation'):
            return value.to_representation()
        return value

    def to_representation(self):
        d = {'outcome': self.typename}
        for name in self.fields:
            d[name] = self._field_representation(name)
        return d

    def __eq__(self, other):
        return type(self) == type(other) and \
            all(getattr(self, f) == getattr(other, f) for f in self.fields)

    def __repr__(self):
        return '{t}({args})'.format(t=self.typename,
            args=', '.join('{f}={v}'.format(f=f, v=getattr(self, f))
                for f in self.fields))


class ExactDistance(BaseOutcome):
    '''
    The supremum distance equals `value`; the input word `witness`
    already forces the outputs apart.
    ```
    {"outcome": "Exact", "value": "1/2", "witness": "001"}
    ```
    '''
    typename = 'Exact'
    fields = ('value', 'witness')

    def __init__(self, value, witness):
        self.value = value
        self.witness = witness

    def to_representation(self):
        return {'outcome': self.typename,
            'value': format_rational(self.value),
            'witness': self.witness}


class DistanceBound(BaseOutcome):
    '''
    All outputs agree to the explored depth, so the distance is at
    most `value`.
    '''
    typename = 'AtMost'
    fields = ('value',)

    def __init__(self, value):
        self.value = value

    def to_representation(self):
        return {'outcome': self.typename, 'value': format_rational(self.value)}


class Surjective(BaseOutcome):
    typename = 'Surjective'


class NotSurjective(BaseOutcome):
    '''
    The image misses the cylinder [witness].
    '''
    typename = 'NotSurjective'
    is_negative = True
    fields = ('witness',)

    def __init__(self, witness):
        self.witness = witness


class Injective(BaseOutcome):
    '''
    `separation` lists pairs [n, m]: inputs that differ within their
    first n bits have images that differ within their first m bits.
    '''
    typename = 'Injective'
    fields = ('separation',)

    def __init__(self, separation):
        self.separation = [list(pair) for pair in separation]


class NotInjective(BaseOutcome):
    '''
    The distinct inputs x_prefix.x_cycle.x_cycle... and
    y_prefix.y_cycle.y_cycle... have the same image.
    '''
    typename = 'NotInjective'
    is_negative = True
    fields = ('x_prefix', 'x_cycle', 'y_prefix', 'y_cycle')

    def __init__(self, x_prefix, x_cycle, y_prefix, y_cycle):
        self.x_prefix = x_prefix
        self.x_cycle = x_cycle
        self.y_prefix = y_prefix
        self.y_cycle = y_cycle


class InjectivityUnknown(BaseOutcome):
    typename = 'Unknown'
    is_exhausted = True
    fields = ('buffer_bound',)

    def __init__(self, buffer_bound):
        self.buffer_bound = buffer_bound


class Preserved(BaseOutcome):
    typename = 'Preserved'
    fields = ('depth',)

    def __init__(self, depth):
        self.depth = depth


class Violated(BaseOutcome):
    '''
    mu(f^-1[witness]) = lhs differs from nu([witness]) = rhs.
    '''
    typename = 'Violated'
    is_negative = True
    fields = ('witness', 'lhs', 'rhs')

    def __init__(self, witness, lhs, rhs):
        self.witness = witness
        self.lhs = lhs
        self.rhs = rhs

    def to_representation(self):
        return {'outcome': self.typename,
            'witness': self.witness,
            'lhs': format_rational(self.lhs),
            'rhs': format_rational(self.rhs)}


class GroupLike(BaseOutcome):
    typename = 'GroupLike'


class Counterexample(BaseOutcome):
    '''
    s <= t are in the (normalized) set but t - s is not.
    '''
    typename = 'Counterexample'
    is_negative = True
    fields = ('s', 't', 'difference')

    def __init__(self, s, t, difference):
        self.s = s
        self.t = t
        self.difference = difference

    def to_representation(self):
        return {'outcome': self.typename,
            's': format_rational(self.s),
            't': format_rational(self.t),
            'difference': format_rational(self.difference)}


class Found(BaseOutcome):
    typename = 'Found'
    fields = ('clopen',)

    def __init__(self, clopen):
        self.clopen = clopen


class NotFoundUpToDepth(BaseOutcome):
    '''
    No clopen subset was found using words of length at most
    `depth_budget`.  `node_limit_reached` says whether the search
    stopped early.  Neither is a proof that no subset exists.
    '''
    typename = 'NotFoundUpToDepth'
    is_exhausted = True
    fields = ('depth_budget', 'node_limit_reached')

    def __init__(self, depth_budget, node_limit_reached=False):
        self.depth_budget = depth_budget
        self.node_limit_reached = node_limit_reached


class ConsistentUpTo(BaseOutcome):
    typename = 'ConsistentUpTo'
    fields = ('depth',)

    def __init__(self, depth):
        self.depth = depth


class Obstruction(BaseOutcome):
    '''
    mu(a) = t <= mu(b), yet no clopen subset of b of measure t was
    found within the budget.
    '''
    typename = 'Obstruction'
    is_exhausted = True
    fields = ('a', 'b', 't', 'budget')

    def __init__(self, a, b, t, budget):
        self.a = a
        self.b = b
        self.t = t
        self.budget = budget

    def to_representation(self):
        return {'outcome': self.typename,
            'a': self.a.to_representation(),
            'b': self.b.to_representation(),
            't': format_rational(self.t),
            'budget': self.budget}


class FailedAtBudget(BaseOutcome):
    '''
    No exact measure-preserving matching of `source` onto `target` was
    found within the budget.
    '''
    typename = 'FailedAtBudget'
    is_exhausted = True
    fields = ('budget', 'source', 'target', 'hypotheses')

    HYPOTHESES = [
        'the clopen values of the source and the target differ'
        ' at this resolution',
        'the budget is too small'
    ]

    def __init__(self, budget, source, target):
        self.budget = budget
        self.source = source
        self.target = target
        self.hypotheses = list(self.HYPOTHESES)


class ValuesIncluded(BaseOutcome):
    typename = 'ValuesIncluded'
    fields = ('depth',)

    def __init__(self, depth):
        self.depth = depth


class ValueMissing(BaseOutcome):
    '''
    `value` is a clopen value of the target measure which is not a
    clopen value of the source measure at the compared depth.
    '''
    typename = 'ValueMissing'
    is_negative = True
    fields = ('value',)

    def __init__(self, value):
        self.value = value

    def to_representation(self):
        return {'outcome': self.typename, 'value': format_rational(self.value)}

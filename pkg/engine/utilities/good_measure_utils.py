import logging
from collections import Counter, \
    deque
from fractions import Fraction
from functools import reduce
from math import gcd

from django.conf import settings

from engine.data_structures import ClopenSet, \
    PrefixExchange, \
    ValueSample
from engine.data_structures.words import all_words, \
    words_up_to
from engine.data_structures.rationals import rational_gcd, \
    is_integer_multiple
from engine.data_structures.outcomes import GroupLike, \
    Counterexample, \
    Found, \
    NotFoundUpToDepth, \
    ConsistentUpTo, \
    Obstruction, \
    FailedAtBudget, \
    ValuesIncluded, \
    ValueMissing
from engine.exceptions import OutOfRangeException, \
    MalformedValueSetException, \
    TotalMismatchException, \
    ResourceLimitException, \
    BudgetExhaustedException, \
    PreservationViolatedException, \
    EmptyClopenException
from .map_utils import preimage_clopen, \
    map_from_rules
from .measure_utils import check_preserves

logger = logging.getLogger(__name__)

# largest integer total for which subset sums are kept as a bitmask
BITSET_LIMIT = 1 << 24


def default_budget(*depths):
    '''
    The search budget used when none is given: the deepest input word
    plus a fixed slack.
    '''
    return max(depths, default=0) + settings.BUDGET_SLACK


###############################################################################
# Clopen values
###############################################################################

def _check_values_depth(depth):
    if depth < 0:
        raise OutOfRangeException('The depth must be non-negative.')
    if depth > settings.MAX_VALUES_DEPTH:
        raise ResourceLimitException('Enumerating clopen values at depth {d}'
            ' exceeds the configured limit of {m}.'.format(
                d=depth, m=settings.MAX_VALUES_DEPTH))


def _too_many_values():
    return ResourceLimitException('More than {n} distinct clopen'
        ' values; raise MAX_VALUE_COUNT or lower the'
        ' depth.'.format(n=settings.MAX_VALUE_COUNT))


def _subset_sums(weights):
    '''
    All sums of sub-multisets of `weights`.

    Weights are put over a common denominator.  When the resulting
    integer total is small enough the sums are the set bits of an integer
    bitmask, shifted once per weight; otherwise a set of sums is grown
    one distinct weight at a time.
    '''
    counts = Counter(weights)
    denominator = reduce(lambda x, y: x * y // gcd(x, y),
        (w.denominator for w in counts), 1)
    scaled = {int(w * denominator): c for w, c in counts.items()}
    top = sum(w * c for w, c in scaled.items())

    if top <= BITSET_LIMIT:
        mask = 1
        for w, c in sorted(scaled.items()):
            for _ in range(c):
                mask |= mask << w
        bits = bin(mask)[2:][::-1]
        if bits.count('1') > settings.MAX_VALUE_COUNT:
            raise _too_many_values()
        return {Fraction(i, denominator) for i, bit in enumerate(bits) if bit == '1'}

    sums = {0}
    for w, c in sorted(scaled.items()):
        sums = {s + k * w for s in sums for k in range(c + 1)}
        if len(sums) > settings.MAX_VALUE_COUNT:
            raise _too_many_values()
    return {Fraction(s, denominator) for s in sums}


def clopen_values(m, depth):
    '''
    The measures of all unions of cylinders of length `depth`.
    '''
    _check_values_depth(depth)
    weights = [m.weight(w) for w in all_words(depth)]
    return ValueSample(depth, _subset_sums(weights), m.total)


def restricted_values(m, clopen, depth):
    '''
    The clopen values of the restriction of m to `clopen`, using
    cylinders of length `depth`.
    '''
    _check_values_depth(depth)
    if clopen.is_empty():
        raise EmptyClopenException('Cannot restrict a measure to the empty set.')
    if clopen.depth > depth:
        raise OutOfRangeException('The set {c} is not a union of cylinders'
            ' of length {d}.'.format(c=clopen, d=depth))
    weights = [m.weight(w) for w in clopen.refined_to(depth)]
    return ValueSample(depth, _subset_sums(weights), m.measure_of(clopen))


def _values_with_witnesses(m, depth):
    '''
    Maps each clopen value at `depth` to the first union of cylinders
    found realizing it, adding cylinders in lexicographic order.
    '''
    _check_values_depth(depth)
    witnesses = {Fraction(0): ()}
    for w in all_words(depth):
        weight = m.weight(w)
        for value, words in list(witnesses.items()):
            total = value + weight
            if total not in witnesses:
                witnesses[total] = words + (w,)
        if len(witnesses) > settings.MAX_VALUE_COUNT:
            raise ResourceLimitException('More than {n} distinct clopen'
                ' values.'.format(n=settings.MAX_VALUE_COUNT))
    return {value: ClopenSet(words) for value, words in witnesses.items()}


###############################################################################
# Group-like sets
###############################################################################

def _arithmetic_step(values):
    '''
    If the sorted values are 0, g, 2g, ..., 1 returns g, else None.
    '''
    if len(values) < 2:
        return None
    step = values[1] - values[0]
    if any(values[i] != i * step for i in range(len(values))):
        return None
    return step


def group_like_check(values, total=None):
    '''
    Checks that t - s lies in the set for all s <= t in it, after
    scaling the set to total 1.  Accepts a `ValueSample` or any
    collection of rationals; for the latter the total defaults to the
    largest element.
    '''
    if isinstance(values, ValueSample):
        total = values.total if total is None else total
        values = values.values
    values = sorted(set(Fraction(v) for v in values))
    if not values:
        raise MalformedValueSetException('The set of values is empty.')
    if total is None:
        total = values[-1]
    if values[0] != 0 or values[-1] != total or total <= 0:
        raise MalformedValueSetException('The values must contain 0 and'
            ' the total {t} as extremes.'.format(t=total))

    normalized = [v / total for v in values]
    if _arithmetic_step(normalized) is not None:
        return GroupLike()

    lookup = set(normalized)
    for i, s in enumerate(normalized):
        for t in normalized[i:]:
            if t - s not in lookup:
                return Counterexample(s, t, t - s)
    return GroupLike()


###############################################################################
# The subset condition
###############################################################################

def find_clopen_subset(m, b, t, depth_budget, node_limit=None):
    '''
    Looks for a clopen A1 inside B with m(A1) = t, built from words of
    length at most `depth_budget` (words of B itself are always usable).

    Depth-first search over a list of available cylinders ordered by
    decreasing weight, then lexicographically.  For the head cylinder
    the branches are: take it whole, split it into its children, skip
    it.  A branch is pruned when the remaining target exceeds the
    available mass, or is not an integer multiple of the gcd of the
    weights the available cylinders can be cut into.
    '''
    t = Fraction(t)
    total = m.measure_of(b)
    if t < 0 or t > total:
        raise OutOfRangeException('The target {t} lies outside [0, {m}].'.format(
            t=t, m=total))
    if t == 0:
        return Found(ClopenSet.empty())
    if t == total:
        return Found(b)
    if node_limit is None:
        node_limit = settings.SUBSET_SEARCH_NODE_LIMIT

    def order(words):
        return tuple(sorted(words, key=lambda w: (-m.weight(w), w)))

    def feasible(pending, remaining):
        if sum((m.weight(w) for w in pending), Fraction(0)) < remaining:
            return False
        g = Fraction(0)
        for w in pending:
            g = rational_gcd(g, m.descendant_gcd(w, max(depth_budget, len(w))))
        return is_integer_multiple(remaining, g)

    start = order(b.antichain)
    if not feasible(start, t):
        logger.debug('The target {t} is not a multiple of the finest cylinder'
            ' gcd inside {b}.'.format(t=t, b=b))
        return NotFoundUpToDepth(depth_budget)

    # nodes are (available cylinders, remaining target, chosen cylinders)
    stack = [(start, t, ())]
    expanded = 0
    while stack:
        pending, remaining, chosen = stack.pop()
        if remaining == 0:
            logger.debug('Found a subset after expanding {n} nodes.'.format(n=expanded))
            return Found(ClopenSet(chosen))
        if not pending or not feasible(pending, remaining):
            continue
        expanded += 1
        if expanded > node_limit:
            logger.warning('Gave up the subset search for {t} inside {b} after'
                ' {n} nodes.'.format(t=t, b=b, n=node_limit))
            return NotFoundUpToDepth(depth_budget, node_limit_reached=True)

        head, rest = pending[0], pending[1:]
        weight = m.weight(head)
        children = []
        if weight <= remaining:
            children.append((rest, remaining - weight, chosen + (head,)))
        if len(head) < depth_budget:
            children.append((order(rest + (head + '0', head + '1')), remaining, chosen))
        children.append((rest, remaining, chosen))
        # the first branch must come off the stack first
        stack.extend(reversed(children))
    return NotFoundUpToDepth(depth_budget)


def goodness_scan(m, depth, budget):
    '''
    For every clopen value t at `depth` and every cylinder B of length
    1..depth with 0 < t < m(B), searches for a clopen subset of B of
    measure t.  Reports the first failure.
    '''
    if depth < 1 or budget < 1:
        raise OutOfRangeException('The depth and the budget must be at least 1.')
    witnesses = _values_with_witnesses(m, depth)
    values = sorted(witnesses.keys())
    for word in words_up_to(depth)[1:]:
        cylinder = ClopenSet.cylinder(word)
        mass = m.weight(word)
        for t in values:
            if t == 0:
                continue
            if t >= mass:
                break
            outcome = find_clopen_subset(m, cylinder, t, budget)
            if outcome.is_exhausted:
                logger.info('No subset of [{w}] with measure {t} within the'
                    ' budget {b}.'.format(w=word, t=t, b=budget))
                return Obstruction(witnesses[t], cylinder, t, budget)
    return ConsistentUpTo(depth)


###############################################################################
# Measure-preserving maps
###############################################################################

def _split_off_largest(m, clopen):
    words = sorted(clopen.antichain, key=lambda w: (-m.weight(w), w))
    head = ClopenSet.cylinder(words[0])
    return head, clopen.difference(head)


def measure_clopen_iso(mu, nu, a, b, budget=None):
    '''
    A prefix exchange of A onto B whose every rule u -> v has
    mu([u]) = nu([v]) and equal conditional measures, so the induced
    map carries mu on A to nu on B.

    Works through a queue of pairs (S, T) with mu(S) = nu(T).  A pair of
    single cylinders with matching conditional measures becomes a rule;
    otherwise the source cylinder is split.  A pair with several source
    cylinders is cut along the largest source cylinder (searching the
    target for a subset of the same measure), and a single source
    against several target cylinders is cut along the largest target
    cylinder.
    '''
    if a.is_empty() or b.is_empty():
        raise EmptyClopenException('Both sets must be nonempty.')
    if mu.measure_of(a) != nu.measure_of(b):
        raise TotalMismatchException('The source has measure {x} but the'
            ' target has measure {y}.'.format(x=mu.measure_of(a), y=nu.measure_of(b)))
    if budget is None:
        budget = default_budget(a.depth, b.depth)

    rules = []
    queue = deque([(a, b)])
    while queue:
        s, t = queue.popleft()
        if len(s) == 1 and len(t) == 1:
            u, v = s.antichain[0], t.antichain[0]
            if mu.conditional_signature(u) == nu.conditional_signature(v):
                rules.append((u, v))
                continue
            if len(u) >= budget:
                logger.info('Cannot match [{u}] with [{v}] within the'
                    ' budget {b}.'.format(u=u, v=v, b=budget))
                return FailedAtBudget(budget, a, b)
            queue.append((ClopenSet([u + '0', u + '1']), t))
            continue

        if len(s) > 1:
            piece, rest = _split_off_largest(mu, s)
            outcome = find_clopen_subset(nu, t, mu.measure_of(piece), budget)
            if outcome.is_exhausted:
                return FailedAtBudget(budget, a, b)
            queue.append((piece, outcome.clopen))
            queue.append((rest, t.difference(outcome.clopen)))
        else:
            piece, rest = _split_off_largest(nu, t)
            outcome = find_clopen_subset(mu, s, nu.measure_of(piece), budget)
            if outcome.is_exhausted:
                return FailedAtBudget(budget, a, b)
            queue.append((outcome.clopen, piece))
            queue.append((s.difference(outcome.clopen), rest))

    logger.debug('Matched {a} onto {b} with {n} rules.'.format(a=a, b=b, n=len(rules)))
    return PrefixExchange(rules, source=a, target=b)


def approx_measure_homeo(f, mu, nu, n, budget=None):
    '''
    The measure-preserving version of `approx_homeo`: each preimage
    f^-1[w] is carried onto [w] by `measure_clopen_iso`.
    '''
    if n < 1:
        raise OutOfRangeException('The depth must be at least 1.')
    outcome = check_preserves(f, mu, nu, n)
    if outcome.is_negative:
        raise PreservationViolatedException(outcome)

    cells = [(w, preimage_clopen(f, ClopenSet.cylinder(w))) for w in all_words(n)]
    if budget is None:
        budget = default_budget(n, *[cell.depth for _, cell in cells])
    rules = []
    for w, cell in cells:
        piece = measure_clopen_iso(mu, nu, cell, ClopenSet.cylinder(w), budget)
        if isinstance(piece, FailedAtBudget):
            raise BudgetExhaustedException('No measure-preserving matching of'
                ' {c} onto [{w}] within the budget {b}.'.format(c=cell, w=w, b=budget))
        rules.extend(piece.rules)
    logger.info('Built a measure-preserving exchange of {k} rules at depth'
        ' {n}.'.format(k=len(rules), n=n))
    return PrefixExchange(rules)


def half_fold(m, budget=None):
    '''
    A 2-to-1 map of (C, m) onto itself preserving m.  A clopen A1 of half
    the mass and its complement A2 are each carried onto the whole space,
    where A1 and A2 carry twice the measure.
    '''
    if budget is None:
        budget = default_budget()
    half = m.total / 2
    outcome = find_clopen_subset(m, ClopenSet.whole(), half, budget)
    if outcome.is_exhausted:
        raise BudgetExhaustedException('No clopen set of measure {h} found'
            ' within the budget {b}.'.format(h=half, b=budget))
    first = outcome.clopen
    second = first.complement()
    doubled = m.scaled(2)

    rules = []
    for piece in (first, second):
        iso = measure_clopen_iso(doubled, m, piece, ClopenSet.whole(), budget)
        if isinstance(iso, FailedAtBudget):
            raise BudgetExhaustedException('Could not carry {p} with the'
                ' doubled measure onto the whole space within the budget'
                ' {b}.'.format(p=piece, b=budget))
        rules.extend(iso.rules)
    logger.info('Half-measure split {a} | {b} gave {n} fold rules.'.format(
        a=first, b=second, n=len(rules)))
    return map_from_rules(rules)


def value_inclusion_check(f, mu, nu, depth):
    '''
    A measure-preserving f has every clopen value of nu among those of
    mu: nu(A) = mu(f^-1 A).  Compares nu's values at `depth` with mu's
    values at the depth of the preimages of the length-`depth` cylinders.
    '''
    preimage_depth = max(preimage_clopen(f, ClopenSet.cylinder(w)).depth
        for w in all_words(depth))
    source = clopen_values(mu, max(depth, preimage_depth))
    for value in clopen_values(nu, depth):
        if value not in source:
            return ValueMissing(value)
    return ValuesIncluded(depth)

import logging

from engine.data_structures import ClopenSet, \
    PrefixExchange
from engine.data_structures.words import all_words
from engine.exceptions import EmptyClopenException, \
    NotSurjectiveException, \
    OutOfRangeException
from .map_utils import surjectivity_decide, \
    preimage_clopen

logger = logging.getLogger(__name__)


def _split_first_shortest(words):
    '''
    Replaces the lexicographically first of the shortest words by its
    two children.
    '''
    target = min(words, key=lambda w: (len(w), w))
    remaining = [w for w in words if w != target]
    return sorted(remaining + [target + '0', target + '1'])


def balance_antichains(a, b):
    '''
    Pairs the cylinders of A with those of B.  The side with fewer
    cylinders is subdivided until both sides have the same number, then
    the two sorted lists are zipped together.
    '''
    if a.is_empty() or b.is_empty():
        raise EmptyClopenException('Cannot match the cylinders of an'
            ' empty set.')
    left = list(a.antichain)
    right = list(b.antichain)
    while len(left) != len(right):
        if len(left) < len(right):
            left = _split_first_shortest(left)
        else:
            right = _split_first_shortest(right)
    return list(zip(left, right))


def canonical_clopen_homeo(a, b):
    return PrefixExchange(balance_antichains(a, b), source=a, target=b)


def approx_homeo(f, n):
    '''
    A self-homeomorphism g with d(f, g) <= 2^-n.  For every word w of
    length n the preimage f^-1[w] is mapped onto [w], so f(x) and g(x)
    always share their first n bits.
    '''
    if n < 1:
        raise OutOfRangeException('The depth must be at least 1.')
    outcome = surjectivity_decide(f)
    if outcome.is_negative:
        raise NotSurjectiveException(outcome.witness)

    rules = []
    for w in all_words(n):
        cell = preimage_clopen(f, ClopenSet.cylinder(w))
        rules.extend(balance_antichains(cell, ClopenSet.cylinder(w)))
    logger.info('Approximated the map at depth {n} by an exchange of'
        ' {k} rules.'.format(n=n, k=len(rules)))
    return PrefixExchange(rules)


def homeo_cells(f, n):
    '''
    The pairs (w, f^-1[w]) over the words w of length n.  Certificates
    record these so that the matching can be re-checked cell by cell.
    '''
    return [(w, preimage_clopen(f, ClopenSet.cylinder(w))) for w in all_words(n)]

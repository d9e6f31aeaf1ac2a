import logging
from fractions import Fraction

from engine.data_structures import ClopenSet
from engine.data_structures.words import words_up_to
from engine.data_structures.outcomes import Preserved, \
    Violated
from engine.exceptions import OutOfRangeException
from .map_utils import preimage_clopen

logger = logging.getLogger(__name__)


def clopen_measure(m, clopen):
    return m.measure_of(clopen)


def mu_mesh(m, partition):
    '''
    The largest measure of a cell.
    '''
    return max((m.measure_of(c) for c in partition.cells), default=0)


def cylinder_depth_for_epsilon(m, eps):
    '''
    The least n such that every cylinder of length n has measure < eps.
    Nonatomic measures have max cylinder weights tending to 0, so
    this terminates.
    '''
    eps = Fraction(eps)
    if eps <= 0:
        raise OutOfRangeException('The tolerance must be positive.')
    n = 0
    while m.max_cylinder_weight(n) >= eps:
        n += 1
    return n


def delta_for_epsilon(m, eps):
    '''
    Returns delta = 2^-n with n from `cylinder_depth_for_epsilon`.  A
    clopen set of diameter < delta lies in a single cylinder of length
    n and so has measure < eps.
    '''
    return Fraction(1, 2 ** cylinder_depth_for_epsilon(m, eps))


def check_preserves(f, mu, nu, depth):
    '''
    Checks mu(f^-1[w]) = nu([w]) for all words w of length at most
    `depth`, shortest first.  Returns the first violation found.
    '''
    if depth < 1:
        raise OutOfRangeException('The depth must be at least 1.')
    for w in words_up_to(depth):
        lhs = mu.measure_of(preimage_clopen(f, ClopenSet.cylinder(w)))
        rhs = nu.weight(w)
        if lhs != rhs:
            logger.info('Measure is not preserved on the cylinder'
                ' [{w}]: {a} != {b}'.format(w=w, a=lhs, b=rhs))
            return Violated(w, lhs, rhs)
    return Preserved(depth)

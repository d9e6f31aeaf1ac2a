import logging
from fractions import Fraction

from engine.data_structures import ClopenSet, \
    ClopenPartition, \
    IntervalSet, \
    RealizationTower, \
    MatchedTower, \
    MatchedCell, \
    common_refinement
from engine.data_structures.words import all_words, \
    breadth_first_words
from engine.data_structures.outcomes import Found
from engine.exceptions import NonNormalizedMeasureException, \
    OutOfRangeException, \
    UnresolvableSetException, \
    PreservationViolatedException, \
    BudgetExhaustedException, \
    InvalidClopenException
from .map_utils import preimage_clopen
from .measure_utils import check_preserves, \
    mu_mesh, \
    cylinder_depth_for_epsilon
from .good_measure_utils import find_clopen_subset, \
    default_budget

logger = logging.getLogger(__name__)


def boolean_distance(m, a, b):
    '''
    d(A, B) = m(A + B), with A + B the symmetric difference.
    '''
    return m.measure_of(a.boolean_sum(b))


def algebra_pullback(f, clopen):
    return preimage_clopen(f, clopen)


def _check_normalized(*measures):
    for m in measures:
        if not m.is_normalized():
            raise NonNormalizedMeasureException('The measure {m} has total'
                ' {t}; normalize it first.'.format(m=m, t=m.total))


def _first_word(clopen):
    return clopen.antichain[0]


def _lay_out(m, cells, start):
    '''
    Assigns consecutive intervals to the cells, in the lexicographic
    order of their first words, starting at `start`.
    '''
    pairs = []
    position = start
    for cell in sorted(cells, key=_first_word):
        end = position + m.measure_of(cell)
        pairs.append((cell, IntervalSet([(position, end)])))
        position = end
    return pairs


def _split_by_cylinders(cell, depth):
    pieces = []
    for w in all_words(depth):
        piece = cell.intersection(ClopenSet.cylinder(w))
        if not piece.is_empty():
            pieces.append(piece)
    return pieces


def default_dense_sequence(count):
    '''
    The cylinders [0], [1], [00], [01], ... which generate the clopen
    algebra.
    '''
    return [ClopenSet.cylinder(w) for w in breadth_first_words(count)]


def caratheodory_tower(m, depth, dense_sequence=None):
    '''
    Builds levels 1..depth.  Level 1 is {E_1, complement of E_1} with
    intervals [0, m(E_1)] and [m(E_1), 1].  Level n+1 cuts every cell of
    level n along E_(n+1); if a resulting cell has measure above
    1/(n+1), all cells are further cut along the cylinders of the length
    given by `cylinder_depth_for_epsilon`.  The children of a cell share
    its interval from left to right.

    A short `dense_sequence` is continued with the default cylinders.
    '''
    _check_normalized(m)
    if depth < 1:
        raise OutOfRangeException('The tower needs at least one level.')
    sequence = list(dense_sequence or [])
    if len(sequence) < depth:
        sequence.extend(default_dense_sequence(depth)[len(sequence):])

    first = sequence[0]
    cells = [c for c in (first, first.complement()) if not c.is_empty()]
    levels = [[]]
    position = Fraction(0)
    for cell in cells:
        end = position + m.measure_of(cell)
        levels[0].append((cell, IntervalSet([(position, end)])))
        position = end

    for n in range(1, depth):
        e = sequence[n]
        bound = Fraction(1, n + 1)
        children = []
        for cell, interval in levels[-1]:
            parts = [p for p in (cell.intersection(e), cell.difference(e))
                if not p.is_empty()]
            children.append((cell, interval, parts))
        if max(m.measure_of(p) for _, _, parts in children for p in parts) > bound:
            k = cylinder_depth_for_epsilon(m, bound)
            children = [
                (cell, interval, [q for p in parts for q in _split_by_cylinders(p, k)])
                for cell, interval, parts in children
            ]
        level = []
        for cell, interval, parts in children:
            level.extend(_lay_out(m, parts, interval.intervals[0][0]))
        logger.debug('Level {n} has {k} cells.'.format(n=n + 1, k=len(level)))
        levels.append(level)
    return RealizationTower(m, sequence, levels)


def interval_realize(tower, clopen):
    '''
    The union of the intervals of the cells making up `clopen`, taken
    at the shallowest level where it is a union of cells.
    '''
    if clopen.is_empty():
        return IntervalSet()
    for n in range(1, tower.depth + 1):
        inside = []
        resolved = True
        for cell, interval in tower.level(n):
            if cell.is_subset_of(clopen):
                inside.append(interval)
            elif not cell.is_disjoint_from(clopen):
                resolved = False
                break
        if resolved:
            return IntervalSet([i for s in inside for i in s.intervals])
    raise UnresolvableSetException(clopen)


def approx_algebra_iso(f, mu, nu, dense_sequence, agree, depth, budget=None):
    '''
    A matched tower T with T(E_i) = f^-1(E_i) for i <= `agree`.

    Level 0 matches the cells of the common refinement of the
    {E_i, complement} on the Y side with their preimages on the X side.
    Level l cuts each Y cell along the cylinders of length (base + l),
    where base is the depth of the level-0 cells, and cuts the matched X
    cell into clopen pieces of the same measures.  The last piece takes
    what remains of the X cell.
    '''
    _check_normalized(mu, nu)
    if agree < 1 or depth < 0:
        raise OutOfRangeException('Need at least one set to agree on and a'
            ' non-negative depth.')
    if len(dense_sequence) < agree:
        raise InvalidClopenException('Only {k} sets were given but agreement'
            ' on {n} was requested.'.format(k=len(dense_sequence), n=agree))
    sets = list(dense_sequence[:agree])

    resolving_depth = max(max(e.depth for e in sets), 1)
    outcome = check_preserves(f, mu, nu, resolving_depth)
    if outcome.is_negative:
        raise PreservationViolatedException(outcome)

    partition = ClopenPartition([ClopenSet.whole()])
    for e in sets:
        halves = [c for c in (e, e.complement()) if not c.is_empty()]
        partition = common_refinement(partition, ClopenPartition(halves))

    base = []
    for y, interval in _lay_out(nu, partition.cells, Fraction(0)):
        base.append(MatchedCell(y, preimage_clopen(f, y), interval))
    levels = [base]
    base_depth = max(c.depth for c in partition.cells)

    for level_index in range(1, depth + 1):
        cut_depth = base_depth + level_index
        level = []
        for matched in levels[-1]:
            level.extend(_refine_matched_cell(mu, nu, matched, cut_depth, budget))
        levels.append(level)
    logger.info('Matched tower with {k} base cells and {d} refinement'
        ' level(s).'.format(k=len(base), d=depth))
    return MatchedTower(mu, nu, sets, agree, levels)


def _refine_matched_cell(mu, nu, matched, cut_depth, budget):
    y_pieces = sorted(_split_by_cylinders(matched.y, cut_depth), key=_first_word)
    remaining = matched.x
    position = matched.interval.intervals[0][0]
    result = []
    for i, y in enumerate(y_pieces):
        mass = nu.measure_of(y)
        if i == len(y_pieces) - 1:
            x = remaining
        else:
            search_budget = budget if budget is not None else \
                default_budget(remaining.depth, cut_depth)
            outcome = find_clopen_subset(mu, remaining, mass, search_budget)
            if not isinstance(outcome, Found):
                raise BudgetExhaustedException('No clopen subset of {x} with'
                    ' measure {m} within the budget {b}.'.format(
                        x=remaining, m=mass, b=search_budget))
            x = outcome.clopen
            remaining = remaining.difference(x)
        result.append(MatchedCell(y, x, IntervalSet([(position, position + mass)])))
        position += mass
    return result


def evaluate_matched_tower(tower, clopen, k):
    '''
    The union of the X cells whose Y cells meet `clopen` at level k,
    with the total nu-measure of the parts of those Y cells lying
    outside `clopen` as an error bound.
    '''
    image = ClopenSet.empty()
    error = Fraction(0)
    for matched in tower.level(k):
        if matched.y.is_disjoint_from(clopen):
            continue
        image = image.union(matched.x)
        error += tower.nu.measure_of(matched.y.difference(clopen))
    return image, error


def matched_tower_distance(first, second, mu):
    '''
    max over i of mu(T1(E_i) + T2(E_i)) / i for two matched towers over
    the same sets E_i.
    '''
    if first.dense_sequence != second.dense_sequence:
        raise InvalidClopenException('The towers are built over different'
            ' sequences of sets.')
    distance = Fraction(0)
    for i, e in enumerate(first.dense_sequence, start=1):
        image_first, _ = evaluate_matched_tower(first, e, 0)
        image_second, _ = evaluate_matched_tower(second, e, 0)
        distance = max(distance, mu.measure_of(image_first.boolean_sum(image_second)) / i)
    return distance


def tower_mu_meshes(tower):
    '''
    The mu-mesh of each level, shallowest first.
    '''
    return [mu_mesh(tower.measure, tower.partition(n))
        for n in range(1, tower.depth + 1)]

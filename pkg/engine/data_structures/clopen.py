import logging

from engine.exceptions import InvalidClopenException, \
    AmbientMismatchException
from .words import normalize_word, \
    sibling, \
    is_prefix, \
    comparable, \
    all_words, \
    common_prefix_length, \
    cylinder_diameter

logger = logging.getLogger(__name__)


def _absorb_prefixes(sorted_words):
    '''
    Drops every word which extends another word in the list.  In
    lexicographic order a word's extensions directly follow it, so
    it suffices to compare with the last word we kept.
    '''
    kept = []
    for w in sorted_words:
        if kept and is_prefix(kept[-1], w):
            continue
        kept.append(w)
    return kept


def _merge_siblings(words):
    '''
    Replaces pairs of siblings u0, u1 by their parent u until no
    sibling pair remains.  Longest words are handled first so that
    merged parents get a chance to merge again.
    '''
    pending = set(words)
    if not pending:
        return []
    for length in range(max(len(w) for w in pending), 0, -1):
        for w in sorted(x for x in pending if len(x) == length):
            if w not in pending:
                continue
            s = sibling(w)
            if s in pending:
                pending.discard(w)
                pending.discard(s)
                pending.add(w[:-1])
    return sorted(pending)


class ClopenSet(object):
    '''
    A `ClopenSet` is a finite union of cylinders of the Cantor space
    C = {0,1}^N, stored in canonical form: a prefix-free antichain of
    words, with no sibling pair u0, u1 (those are merged into u), sorted
    lexicographically.  Two `ClopenSet`s are therefore equal exactly when
    they denote the same set.

    The empty antichain is the empty set and the antichain holding only
    the empty word is all of C.

    Serialized as:
    ```
    {
        "antichain": ["00", "11"]
    }
    ```
    '''

    def __init__(self, words=()):
        normalized = sorted(normalize_word(w) for w in words)
        self.antichain = tuple(_merge_siblings(_absorb_prefixes(normalized)))

    @classmethod
    def whole(cls):
        return cls([''])

    @classmethod
    def empty(cls):
        return cls([])

    @classmethod
    def cylinder(cls, word):
        return cls([word])

    def is_empty(self):
        return len(self.antichain) == 0

    def is_whole(self):
        return self.antichain == ('',)

    @property
    def depth(self):
        '''
        The length of the longest word of the antichain.
        '''
        if self.is_empty():
            return 0
        return max(len(w) for w in self.antichain)

    def contains_cylinder(self, word):
        '''
        True if [word] is a subset of this set.
        '''
        return any(is_prefix(u, word) for u in self.antichain)

    def meets_cylinder(self, word):
        '''
        True if [word] intersects this set.
        '''
        return any(comparable(u, word) for u in self.antichain)

    def quotient(self, prefix):
        '''
        The residual set {x : prefix.x in A}.
        '''
        residual = []
        for w in self.antichain:
            if is_prefix(w, prefix):
                return ClopenSet.whole()
            if is_prefix(prefix, w):
                residual.append(w[len(prefix):])
        return ClopenSet(residual)

    def refined_to(self, depth):
        '''
        The list of depth-`depth` words whose cylinders make up this set.
        Requires depth >= self.depth.
        '''
        if depth < self.depth:
            raise InvalidClopenException('Cannot refine a set of depth {d}'
                ' to the shallower depth {n}.'.format(d=self.depth, n=depth))
        result = []
        for w in self.antichain:
            result.extend(w + tail for tail in all_words(depth - len(w)))
        return sorted(result)

    def union(self, other):
        return ClopenSet(self.antichain + other.antichain)

    def intersection(self, other):
        # [u] and [v] meet only when one word extends the other and then
        # the intersection is the cylinder of the longer word
        words = []
        for u in self.antichain:
            for v in other.antichain:
                if is_prefix(u, v):
                    words.append(v)
                elif is_prefix(v, u):
                    words.append(u)
        return ClopenSet(words)

    def complement(self):
        return ClopenSet(_complement_below(self.antichain, ''))

    def difference(self, other):
        return self.intersection(other.complement())

    def boolean_sum(self, other):
        '''
        The symmetric difference (A u B) \\ (A n B).
        '''
        return self.difference(other).union(other.difference(self))

    def is_subset_of(self, other):
        return self.difference(other).is_empty()

    def is_disjoint_from(self, other):
        return self.intersection(other).is_empty()

    def to_representation(self):
        return {'antichain': list(self.antichain)}

    def __eq__(self, other):
        return isinstance(other, ClopenSet) and self.antichain == other.antichain

    def __hash__(self):
        return hash(self.antichain)

    def __lt__(self, other):
        return self.antichain < other.antichain

    def __iter__(self):
        return iter(self.antichain)

    def __len__(self):
        return len(self.antichain)

    def __repr__(self):
        return 'ClopenSet({words})'.format(
            words='{' + ', '.join(w if w else 'ε' for w in self.antichain) + '}')


def _complement_below(antichain, prefix):
    if any(is_prefix(w, prefix) for w in antichain):
        return []
    below = [w for w in antichain if is_prefix(prefix, w)]
    if not below:
        return [prefix]
    return _complement_below(below, prefix + '0') + \
        _complement_below(below, prefix + '1')


def canonicalize(words):
    '''
    Returns the canonical `ClopenSet` for the union of the cylinders
    named by `words`.
    '''
    return ClopenSet(words)


BOOLEAN_OPERATIONS = ['union', 'intersection', 'complement', 'boolean_sum']


def boolean_op(op, a, b=None):
    '''
    Applies one of the Boolean operations named in BOOLEAN_OPERATIONS.
    Complement takes a single argument; the rest take two.
    '''
    if op not in BOOLEAN_OPERATIONS:
        raise InvalidClopenException('Unknown Boolean operation "{op}".'
            ' Choose from: {ops}'.format(op=op, ops=', '.join(BOOLEAN_OPERATIONS)))
    if op == 'complement':
        if b is not None:
            raise InvalidClopenException('The complement takes one argument.')
        return a.complement()
    if b is None:
        raise InvalidClopenException('The {op} operation takes'
            ' two arguments.'.format(op=op))
    return getattr(a, op)(b)


def diameter(clopen):
    '''
    The d-diameter of a clopen set.  For distinct words of an antichain
    the longest common prefix is shorter than either word, so pairs of
    cylinders dominate.  In sorted order the first and last words have
    the shortest common prefix of all pairs.
    '''
    words = clopen.antichain
    if len(words) == 0:
        return cylinder_diameter('') * 0
    if len(words) == 1:
        return cylinder_diameter(words[0])
    return cylinder_diameter(words[0][:common_prefix_length(words[0], words[-1])])


class ClopenPartition(object):
    '''
    A `ClopenPartition` is a finite list of pairwise disjoint, nonempty
    `ClopenSet`s (the cells) whose union is the ambient set (by default
    the whole space).  Cells are kept sorted by their antichains so that
    equal partitions compare equal.

    Serialized as a list of clopen sets:
    ```
    [
        {"antichain": ["0"]},
        {"antichain": ["1"]}
    ]
    ```
    '''

    def __init__(self, cells, ambient=None):
        if ambient is None:
            ambient = ClopenSet.whole()
        self.ambient = ambient

        cells = list(cells)
        for c in cells:
            if c.is_empty():
                raise InvalidClopenException('Partition cells must be nonempty.')

        # each cell is an antichain, so any comparable pair of words
        # comes from two different cells.  After sorting, such a pair
        # shows up as neighbors.
        owned = sorted((w, i) for i, c in enumerate(cells) for w in c.antichain)
        for (u, i), (v, j) in zip(owned, owned[1:]):
            if comparable(u, v):
                raise InvalidClopenException('The cells {a} and {b} of'
                    ' the partition overlap.'.format(a=cells[i], b=cells[j]))

        union = ClopenSet([w for c in cells for w in c.antichain])
        if union != ambient:
            raise AmbientMismatchException('The union of the cells is {u}'
                ' but the ambient set is {a}.'.format(u=union, a=ambient))
        self.cells = tuple(sorted(cells))

    @classmethod
    def cylinders(cls, depth, ambient=None):
        '''
        The partition of the ambient set by its depth-`depth` cylinders.
        '''
        if ambient is None:
            ambient = ClopenSet.whole()
        return cls([ClopenSet.cylinder(w) for w in ambient.refined_to(depth)], ambient)

    def refines(self, other):
        '''
        True if every cell lies inside exactly one cell of `other`.
        '''
        if self.ambient != other.ambient:
            return False
        return all(
            sum(1 for d in other.cells if c.is_subset_of(d)) == 1
            for c in self.cells
        )

    def to_representation(self):
        return [c.to_representation() for c in self.cells]

    def __eq__(self, other):
        return isinstance(other, ClopenPartition) and \
            self.cells == other.cells and self.ambient == other.ambient

    def __hash__(self):
        return hash(self.cells)

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __repr__(self):
        return 'A partition of {ambient} into:\n{cells}'.format(
            ambient=self.ambient,
            cells='\n'.join(str(c) for c in self.cells))


def common_refinement(p1, p2):
    '''
    The partition of all nonempty intersections of a cell of `p1` with
    a cell of `p2`.
    '''
    if p1.ambient != p2.ambient:
        raise AmbientMismatchException('Cannot refine partitions of different'
            ' ambient sets {a} and {b}.'.format(a=p1.ambient, b=p2.ambient))
    cells = []
    for c in p1.cells:
        for d in p2.cells:
            meet = c.intersection(d)
            if not meet.is_empty():
                cells.append(meet)
    return ClopenPartition(cells, p1.ambient)


def mesh(partition):
    '''
    The d-mesh: the largest diameter of a cell.
    '''
    return max((diameter(c) for c in partition.cells), default=0)

import heapq
import logging
from collections import deque
from fractions import Fraction

import networkx as nx
from django.conf import settings

from engine.data_structures import ClopenSet, \
    TransducerMap
from engine.data_structures.words import flip, \
    is_prefix, \
    common_prefix_length
from engine.data_structures.outcomes import ExactDistance, \
    DistanceBound, \
    Surjective, \
    NotSurjective, \
    Injective, \
    NotInjective, \
    InjectivityUnknown
from engine.exceptions import InvalidExchangeException, \
    OutOfRangeException

logger = logging.getLogger(__name__)

BITS = ('0', '1')


###############################################################################
# Constructors
###############################################################################

def identity_map():
    return TransducerMap(['id'], 'id',
        {('id', b): (b, 'id') for b in BITS})


def constant_map(bit):
    '''
    The map sending every input to the constant sequence bit.bit.bit...
    '''
    return TransducerMap(['const'], 'const',
        {('const', b): (bit, 'const') for b in BITS})


def first_bit_flip():
    transitions = {('copy', b): (b, 'copy') for b in BITS}
    transitions.update({('start', b): (flip(b), 'copy') for b in BITS})
    return TransducerMap(['start', 'copy'], 'start', transitions)


def fold_map():
    '''
    The 2-to-1 fold: 0x -> x and 1x -> complement of x.
    The first input bit only selects the branch and emits nothing.
    '''
    transitions = {
        ('start', '0'): ('', 'copy'),
        ('start', '1'): ('', 'flip'),
    }
    transitions.update({('copy', b): (b, 'copy') for b in BITS})
    transitions.update({('flip', b): (flip(b), 'flip') for b in BITS})
    return TransducerMap(['start', 'copy', 'flip'], 'start', transitions)


def map_from_rules(rules):
    '''
    Builds the transducer for the map u.z -> v.z from rules (u, v) whose
    in-words u partition the whole space into cylinders.  Out-words are
    arbitrary, so many-to-one maps (e.g. folds) are allowed.

    The machine walks down the trie of in-words (states "t" + prefix) and
    on completing an in-word emits its out-word and switches to the copy
    state "c".
    '''
    rules = sorted(rules)
    in_words = [u for u, _ in rules]
    for u, w in zip(in_words, in_words[1:]):
        if is_prefix(u, w):
            raise InvalidExchangeException('The in-words "{u}" and "{w}"'
                ' overlap.'.format(u=u, w=w))
    if not ClopenSet(in_words).is_whole():
        raise InvalidExchangeException('The in-words must cover the whole'
            ' space, but cover {c}.'.format(c=ClopenSet(in_words)))

    output = dict(rules)
    transitions = {('c', b): (b, 'c') for b in BITS}
    states = ['t']
    if '' in output:
        transitions.update({('t', b): (output[''] + b, 'c') for b in BITS})
    else:
        internal = sorted({u[:i] for u in in_words for i in range(len(u))},
            key=lambda w: (len(w), w))
        states = ['t' + p for p in internal]
        for p in internal:
            for b in BITS:
                if p + b in output:
                    transitions[('t' + p, b)] = (output[p + b], 'c')
                else:
                    transitions[('t' + p, b)] = ('', 't' + p + b)
    states.append('c')
    return TransducerMap(states, 't', transitions)


def from_prefix_exchange(exchange):
    if not exchange.is_self_homeomorphism():
        raise InvalidExchangeException('Only exchanges of the whole space'
            ' onto itself become transducers.')
    return map_from_rules(exchange.rules)


###############################################################################
# Evaluation and preimages
###############################################################################

def evaluate(f, word):
    return f.evaluate(word)


def preimage_clopen(f, clopen):
    '''
    Computes f^-1(A) for a clopen A.  pre(q, R) is the set of inputs
    which, fed from state q, land in R; it is
    the union over bits b of b.pre(q', R / emit) where (emit, q') is the
    transition on b and R / emit the residual of R after emit.
    '''
    memo = {}

    def pre(state, residual):
        if residual.is_empty():
            return ClopenSet.empty()
        if residual.is_whole():
            return ClopenSet.whole()
        key = (state, residual)
        if key not in memo:
            words = []
            for b in BITS:
                emit, target = f.step(state, b)
                below = pre(target, residual.quotient(emit))
                words.extend(b + w for w in below.antichain)
            memo[key] = ClopenSet(words)
        return memo[key]

    return pre(f.initial, clopen)


def compose(f, g):
    '''
    Returns h with h(x) = g(f(x)).  A state of h is a pair of states;
    whatever f emits is fed through g at once, so no output is buffered.
    States are renamed s0, s1, ... in breadth-first order.
    '''
    start = (f.initial, g.initial)
    names = {start: 's0'}
    transitions = {}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        for b in BITS:
            emit, p_next = f.step(p, b)
            out, q_next = g.run(emit, q)
            target = (p_next, q_next)
            if target not in names:
                names[target] = 's{i}'.format(i=len(names))
                queue.append(target)
            transitions[(names[(p, q)], b)] = (out, names[target])
    states = sorted(names.values(), key=lambda s: int(s[1:]))
    return TransducerMap(states, 's0', transitions)


###############################################################################
# The map-space metric
###############################################################################

def sup_distance(f, g, depth_bound):
    '''
    The supremum over x of d(f(x), g(x)), where d(u, v) = 2^-k for k the
    length of the longest common prefix.

    Runs f and g side by side; a configuration is (state of f, state of
    g, unmatched output of f, unmatched output of g) together with the
    number L of output bits known to agree.  Configurations are expanded
    in order of increasing L, so the first disagreement popped is the
    shallowest one, and its distance is the supremum.
    '''
    if depth_bound < 1:
        raise OutOfRangeException('The depth bound must be at least 1.')

    counter = 0
    start = (f.initial, g.initial, '', '')
    # entries: (agreed length, tie-break, disagreement flag, config, input)
    heap = [(0, counter, False, start, '')]
    seen = set()
    while heap:
        agreed, _, disagrees, config, word = heapq.heappop(heap)
        if disagrees:
            logger.debug('Outputs first differ at position {k} on the input'
                ' {w}.'.format(k=agreed + 1, w=word))
            return ExactDistance(Fraction(1, 2 ** agreed), word)
        if config in seen:
            continue
        seen.add(config)
        p, q, buf_f, buf_g = config
        for b in BITS:
            emit_f, p_next = f.step(p, b)
            emit_g, q_next = g.step(q, b)
            left = buf_f + emit_f
            right = buf_g + emit_g
            n = min(len(left), len(right))
            k = common_prefix_length(left[:n], right[:n])
            counter += 1
            if k < n:
                if agreed + k < depth_bound:
                    heapq.heappush(heap, (agreed + k, counter, True, None, word + b))
                continue
            if agreed + n >= depth_bound:
                continue
            heapq.heappush(heap, (agreed + n, counter, False,
                (p_next, q_next, left[n:], right[n:]), word + b))
    return DistanceBound(Fraction(1, 2 ** depth_bound))


###############################################################################
# Surjectivity and injectivity
###############################################################################

def _advance(f, configurations, bit):
    '''
    A configuration (q, r) means: the machine is in state q and has
    emitted r beyond the output bits matched so far.  Returns the
    configurations in which the next output bit can be `bit`.
    '''
    result = set()
    for state, pending in configurations:
        if pending:
            if pending[0] == bit:
                result.add((state, pending[1:]))
            continue
        # run silent transitions until something is emitted; there are
        # no silent cycles so this terminates
        stack = [state]
        visited = set()
        while stack:
            q = stack.pop()
            if q in visited:
                continue
            visited.add(q)
            for b in BITS:
                emit, target = f.step(q, b)
                if emit == '':
                    stack.append(target)
                elif emit[0] == bit:
                    result.add((target, emit[1:]))
    return frozenset(result)


def surjectivity_decide(f):
    '''
    Decides whether every cylinder meets the image of f.  The set of
    configurations compatible with an output prefix w is empty exactly
    when f(C) misses [w].  A breadth-first search over these sets (bit 0
    before bit 1) returns the shortest such w.
    '''
    start = frozenset([(f.initial, '')])
    seen = {start}
    queue = deque([(start, '')])
    while queue:
        configurations, word = queue.popleft()
        for b in BITS:
            following = _advance(f, configurations, b)
            if not following:
                logger.info('The image misses the cylinder [{w}].'.format(w=word + b))
                return NotSurjective(word + b)
            if following not in seen:
                seen.add(following)
                queue.append((following, word + b))
    return Surjective()


def _injectivity_graph(f, buffer_bound):
    '''
    Runs f on pairs of inputs after they first differ.  Nodes are
    (state x, state y, unmatched output x, unmatched output y); edges
    carry the input bit pair and the number of output bits matched.
    Pairs whose outputs disagree go to the node "dead".  Returns the
    graph, the start node of each state and whether some unmatched
    output grew past the bound.
    '''
    graph = nx.DiGraph()
    graph.add_node('dead')
    overflow = False
    starts = {}
    stack = []

    def link(source, outputs, bits, states):
        nonlocal overflow
        left, right = outputs
        n = min(len(left), len(right))
        k = common_prefix_length(left[:n], right[:n])
        if k < n:
            if not graph.has_edge(source, 'dead') or graph[source]['dead']['matched'] < k:
                graph.add_edge(source, 'dead', bits=bits, matched=k)
            return None
        node = (states[0], states[1], left[n:], right[n:])
        if max(len(node[2]), len(node[3])) > buffer_bound:
            overflow = True
            return None
        if not graph.has_node(node):
            stack.append(node)
        if not graph.has_edge(source, node) or graph[source][node]['matched'] < n:
            graph.add_edge(source, node, bits=bits, matched=n)
        return node

    for state in f.states:
        emit_x, qx = f.step(state, '0')
        emit_y, qy = f.step(state, '1')
        source = ('diverge', state)
        graph.add_node(source)
        starts[state] = source
        link(source, (emit_x, emit_y), ('0', '1'), (qx, qy))

    while stack:
        node = stack.pop()
        qx, qy, buf_x, buf_y = node
        for bx in BITS:
            for by in BITS:
                emit_x, nx_state = f.step(qx, bx)
                emit_y, ny_state = f.step(qy, by)
                link(node, (buf_x + emit_x, buf_y + emit_y), (bx, by),
                    (nx_state, ny_state))
    return graph, starts, overflow


def _longest_matched(graph):
    '''
    For every node of the acyclic graph, the largest number of output
    bits matched along a path from it.
    '''
    longest = {}
    for node in reversed(list(nx.topological_sort(graph))):
        longest[node] = max((data['matched'] + longest[succ]
            for succ, data in graph[node].items()), default=0)
    return longest


def _max_output_lengths(f, steps):
    '''
    best[k][q]: the longest output of an input of length k ending in q.
    '''
    best = [{f.initial: 0}]
    for _ in range(steps):
        current = {}
        for q, length in best[-1].items():
            for b in BITS:
                emit, target = f.step(q, b)
                current[target] = max(current.get(target, 0), length + len(emit))
        best.append(current)
    return best


def injectivity_certificate(f, buffer_bound=None):
    '''
    Looks for two distinct inputs with the same image.  After a common
    prefix reaching state p the inputs continue with 0 and 1; the pair is
    then run through the product graph of `_injectivity_graph`.  A cycle
    reachable from a start node gives equal images forever, hence
    NotInjective.  With no cycle and no overflow every pair eventually
    disagrees and the separation moduli come from longest paths.
    '''
    if buffer_bound is None:
        buffer_bound = settings.INJECTIVITY_BUFFER_BOUND
    if buffer_bound < 1:
        raise OutOfRangeException('The buffer bound must be at least 1.')

    graph, starts, overflow = _injectivity_graph(f, buffer_bound)
    access = f.access_words()
    for state in sorted(f.states, key=lambda s: (len(access[s]), access[s])):
        source = starts[state]
        try:
            cycle = nx.find_cycle(graph, source=source)
        except nx.NetworkXNoCycle:
            continue
        entry = cycle[0][0]
        path = nx.shortest_path(graph, source, entry)
        prefix_pairs = [graph[u][v]['bits'] for u, v in zip(path, path[1:])]
        cycle_pairs = [graph[u][v]['bits'] for u, v in cycle]
        x_prefix = access[state] + ''.join(p[0] for p in prefix_pairs)
        y_prefix = access[state] + ''.join(p[1] for p in prefix_pairs)
        outcome = NotInjective(x_prefix, ''.join(p[0] for p in cycle_pairs),
            y_prefix, ''.join(p[1] for p in cycle_pairs))
        logger.info('Found two inputs with the same image: {o}'.format(o=outcome))
        return outcome

    if overflow:
        logger.warning('Unmatched output exceeded {n} bits; injectivity'
            ' left undecided.'.format(n=buffer_bound))
        return InjectivityUnknown(buffer_bound)

    longest = _longest_matched(graph)
    lengths = _max_output_lengths(f, buffer_bound - 1)
    separation = []
    modulus = 0
    for n in range(1, buffer_bound + 1):
        # inputs first differing at position n share a prefix of length n-1
        for q, length in lengths[n - 1].items():
            modulus = max(modulus, length + longest[starts[q]] + 1)
        separation.append((n, modulus))
    return Injective(separation)

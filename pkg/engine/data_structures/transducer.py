import logging
from collections import deque

import networkx as nx

from engine.exceptions import InvalidTransducerException, \
    StarvingTransducerException, \
    InvalidWordException
from .words import normalize_word

logger = logging.getLogger(__name__)

BITS = ('0', '1')


class TransducerMap(object):
    '''
    A `TransducerMap` is a deterministic finite-state machine reading
    one input bit per step and emitting a (possibly empty) binary word.
    It denotes the continuous map C -> C sending an infinite input to
    the concatenation of everything emitted along the run.

    For the map to be well-defined every cycle reachable from the initial
    state must emit at least one bit (the machine is "non-starving").
    This is checked at construction, as are totality of the transition
    function and reachability: unreachable states are dropped.

    `transitions` maps (state, bit) to (emitted word, next state); the
    bit is one of the characters '0', '1'.

    Serialized as:
    ```
    {
        "states": ["start", "copy", "flip"],
        "initial": "start",
        "transitions": [
            {"from": "start", "bit": 0, "emit": "", "to": "copy"},
            ...
        ]
    }
    ```
    '''

    def __init__(self, states, initial, transitions):
        states = list(states)
        if len(set(states)) != len(states):
            raise InvalidTransducerException('The list of states contained'
                ' duplicates.')
        if initial not in states:
            raise InvalidTransducerException('The initial state "{s}" is'
                ' not among the states.'.format(s=initial))

        checked = {}
        for (state, bit), (emit, target) in transitions.items():
            if state not in states or target not in states:
                raise InvalidTransducerException('The transition ({s}, {b})'
                    ' -> {t} refers to an unknown state.'.format(
                        s=state, b=bit, t=target))
            if bit not in BITS:
                raise InvalidTransducerException('Transitions may only'
                    ' read the bits 0 and 1, not "{b}".'.format(b=bit))
            try:
                normalize_word(emit)
            except InvalidWordException as ex:
                raise InvalidTransducerException('The transition ({s}, {b})'
                    ' has an invalid output: {ex}'.format(s=state, b=bit, ex=ex))
            checked[(state, bit)] = (emit, target)

        for s in states:
            for b in BITS:
                if (s, b) not in checked:
                    raise InvalidTransducerException('The state "{s}" has no'
                        ' transition for the bit {b}.'.format(s=s, b=b))

        self.initial = initial
        reachable = self._reachable(initial, checked)
        self.states = tuple(s for s in states if s in reachable)
        self.transitions = {
            k: v for k, v in checked.items() if k[0] in reachable
        }
        if len(self.states) < len(states):
            logger.debug('Dropped {n} unreachable state(s).'.format(
                n=len(states) - len(self.states)))
        self._check_non_starving()

    @staticmethod
    def _reachable(initial, transitions):
        seen = {initial}
        queue = deque([initial])
        while queue:
            s = queue.popleft()
            for b in BITS:
                t = transitions[(s, b)][1]
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        return seen

    def _check_non_starving(self):
        silent = nx.DiGraph()
        silent.add_nodes_from(self.states)
        for (s, b), (emit, t) in self.transitions.items():
            if emit == '':
                silent.add_edge(s, t)
        if not nx.is_directed_acyclic_graph(silent):
            cycle = nx.find_cycle(silent)
            raise StarvingTransducerException('The cycle through states'
                ' {states} emits no output, so some inputs have a finite'
                ' image.'.format(states=', '.join(str(e[0]) for e in cycle)))

    def step(self, state, bit):
        return self.transitions[(state, bit)]

    def run(self, word, state=None):
        '''
        Feeds `word` starting in `state` (the initial state by default).
        Returns the emitted output and the final state.
        '''
        if state is None:
            state = self.initial
        output = []
        for b in word:
            emit, state = self.transitions[(state, b)]
            output.append(emit)
        return ''.join(output), state

    def evaluate(self, word):
        return self.run(word)[0]

    def evaluate_periodic(self, prefix, cycle, length):
        '''
        The first `length` output bits of the image of the eventually
        periodic input prefix.cycle.cycle...
        '''
        if cycle == '':
            raise InvalidWordException('The repeating part of a periodic'
                ' input cannot be empty.')
        output, state = self.run(prefix)
        while len(output) < length:
            emitted, state = self.run(cycle, state)
            output += emitted
        return output[:length]

    def access_words(self):
        '''
        For each state, the shortest (then lexicographically least) input
        word leading there from the initial state.
        '''
        access = {self.initial: ''}
        queue = deque([self.initial])
        while queue:
            s = queue.popleft()
            for b in BITS:
                t = self.transitions[(s, b)][1]
                if t not in access:
                    access[t] = access[s] + b
                    queue.append(t)
        return access

    def to_representation(self):
        order = {s: i for i, s in enumerate(self.states)}
        ordered = sorted(self.transitions.items(),
            key=lambda item: (order[item[0][0]], item[0][1]))
        return {
            'states': list(self.states),
            'initial': self.initial,
            'transitions': [
                {'from': s, 'bit': int(b), 'emit': emit, 'to': t}
                for (s, b), (emit, t) in ordered
            ]
        }

    def __eq__(self, other):
        return isinstance(other, TransducerMap) and \
            self.initial == other.initial and \
            self.transitions == other.transitions

    def __repr__(self):
        return 'TransducerMap with {n} states, initial state "{s}"'.format(
            n=len(self.states), s=self.initial)

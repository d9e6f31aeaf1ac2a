import logging

from engine.exceptions import OutOfRangeException
from .clopen import ClopenPartition

logger = logging.getLogger(__name__)


class RealizationTower(object):
    '''
    A nested sequence of clopen partitions of the Cantor space, each cell
    assigned an interval of [0, 1] whose length is the measure of the
    cell.  Level n+1 refines level n and the children of a cell split
    its interval from left to right.

    `levels[k]` holds level k+1 as a list of (cell, IntervalSet) pairs in
    left-to-right order of their intervals.  `dense_sequence` is the list
    of clopen sets E_1, E_2, ... that the levels resolve.

    Serialized as:
    ```
    {
        "measure": {...},
        "dense_sequence": [{"antichain": ["0"]}, ...],
        "levels": [
            {
                "level": 1,
                "cells": [
                    {"cell": {"antichain": ["0"]}, "interval": {"intervals": [["0", "1/3"]]}},
                    ...
                ]
            },
            ...
        ]
    }
    ```
    '''

    def __init__(self, measure, dense_sequence, levels):
        self.measure = measure
        self.dense_sequence = tuple(dense_sequence)
        self.levels = tuple(tuple(level) for level in levels)

    @property
    def depth(self):
        return len(self.levels)

    def level(self, n):
        '''
        The (cell, interval) pairs of level n, counting from 1.
        '''
        if not (1 <= n <= self.depth):
            raise OutOfRangeException('The tower has levels 1 to {d},'
                ' not {n}.'.format(d=self.depth, n=n))
        return self.levels[n - 1]

    def partition(self, n):
        return ClopenPartition([cell for cell, _ in self.level(n)])

    def interval_of(self, n, cell):
        for c, interval in self.level(n):
            if c == cell:
                return interval
        return None

    def to_representation(self):
        return {
            'measure': self.measure.to_representation(),
            'dense_sequence': [e.to_representation()
                for e in self.dense_sequence[:self.depth]],
            'levels': [
                {
                    'level': i + 1,
                    'cells': [
                        {
                            'cell': cell.to_representation(),
                            'interval': interval.to_representation()
                        } for cell, interval in level
                    ]
                } for i, level in enumerate(self.levels)
            ]
        }


class MatchedCell(object):
    '''
    A Y-side cell, the X-side cell matched with it and the interval
    they share.  The three have equal measure.
    '''

    def __init__(self, y, x, interval):
        self.y = y
        self.x = x
        self.interval = interval

    def to_representation(self):
        return {
            'y': self.y.to_representation(),
            'x': self.x.to_representation(),
            'interval': self.interval.to_representation()
        }

    def __eq__(self, other):
        return (self.y, self.x, self.interval) == (other.y, other.x, other.interval)

    def __repr__(self):
        return '{y} <-> {x} on {i}'.format(y=self.y, x=self.x, i=self.interval)


class MatchedTower(object):
    '''
    An approximant T of a measure algebra isomorphism from the clopen
    algebra of (C, nu) to that of (C, mu).  Level 0 is the common
    refinement of the first n sets of the dense sequence; each later
    level refines the previous one on the Y side, on the X side and on
    the interval side at once.

    `levels[k]` is the list of `MatchedCell`s of level k.
    '''

    def __init__(self, mu, nu, dense_sequence, agree, levels):
        self.mu = mu
        self.nu = nu
        self.dense_sequence = tuple(dense_sequence)
        self.agree = agree
        self.levels = tuple(tuple(level) for level in levels)

    @property
    def depth(self):
        '''
        The index of the deepest level (level 0 is the base).
        '''
        return len(self.levels) - 1

    def level(self, k):
        if not (0 <= k <= self.depth):
            raise OutOfRangeException('The matched tower has levels 0 to'
                ' {d}, not {k}.'.format(d=self.depth, k=k))
        return self.levels[k]

    def to_representation(self):
        return {
            'mu': self.mu.to_representation(),
            'nu': self.nu.to_representation(),
            'agree': self.agree,
            'dense_sequence': [e.to_representation() for e in self.dense_sequence],
            'levels': [
                {
                    'level': k,
                    'cells': [c.to_representation() for c in level]
                } for k, level in enumerate(self.levels)
            ]
        }

'''
Hypothesis strategies shared by the tests, the brute-force membership
oracle the clopen tests compare against, and seeded random maps.
'''
import random

from hypothesis import strategies as st

from engine.data_structures import ClopenSet, \
    PrefixExchange
from engine.data_structures.words import all_words
from engine.utilities import compose, \
    from_prefix_exchange

ORACLE_DEPTH = 8

words = st.text(alphabet='01', max_size=ORACLE_DEPTH)

word_lists = st.lists(words, max_size=12)

clopen_sets = word_lists.map(ClopenSet)

nonempty_clopen_sets = st.lists(words, min_size=1, max_size=12).map(ClopenSet)


def members(word_list, depth=ORACLE_DEPTH):
    '''
    The depth-`depth` words x whose cylinder lies in the union of the
    cylinders named by `word_list`.
    '''
    return {x for x in all_words(depth) if any(x.startswith(w) for w in word_list)}


def random_clopen(rng, depth=ORACLE_DEPTH, size=6):
    word_list = []
    for _ in range(rng.randint(1, size)):
        length = rng.randint(1, depth)
        word_list.append(''.join(rng.choice('01') for _ in range(length)))
    return ClopenSet(word_list)


def random_exchange(rng, max_depth=3):
    '''
    A random permutation of the cylinders of one length.
    '''
    domain = all_words(rng.randint(1, max_depth))
    image = list(domain)
    rng.shuffle(image)
    return PrefixExchange(list(zip(domain, image)))


def exchange_compositions(count=20, seed=2):
    '''
    `count` maps, each composed of two or three random exchanges.
    '''
    rng = random.Random(seed)
    maps = []
    for _ in range(count):
        f = from_prefix_exchange(random_exchange(rng))
        for _ in range(rng.randint(1, 2)):
            f = compose(f, from_prefix_exchange(random_exchange(rng)))
        maps.append(f)
    return maps

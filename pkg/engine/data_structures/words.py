'''
Finite binary words.  A word w names the cylinder [w] of all infinite
binary sequences which begin with w.  The empty word names the whole
space.  Bit order: the leftmost character is coordinate 1.
'''
import itertools
import re
from fractions import Fraction

from engine.exceptions import InvalidWordException

WORD_PATTERN = re.compile('[01]*')

# the whole space C is the cylinder of the empty word
EMPTY_WORD = ''


def normalize_word(word):
    '''
    Checks that `word` is a string over {0,1} and returns it.
    '''
    if type(word) != str:
        raise InvalidWordException('The word "{word}" was not'
            ' a string.'.format(word=word))
    if WORD_PATTERN.fullmatch(word) is None:
        raise InvalidWordException('The word "{word}" may only contain'
            ' the characters 0 and 1.'.format(word=word))
    return word


def flip(word):
    '''
    Complements every bit of the word.
    '''
    return word.translate(str.maketrans('01', '10'))


def sibling(word):
    '''
    The word that differs from `word` only in its last bit.
    '''
    return word[:-1] + flip(word[-1])


def children(word):
    return (word + '0', word + '1')


def is_prefix(u, w):
    '''
    True if u is a (not necessarily proper) prefix of w, i.e. [w] is
    contained in [u].
    '''
    return w.startswith(u)


def comparable(u, w):
    return u.startswith(w) or w.startswith(u)


def common_prefix_length(u, w):
    n = 0
    for a, b in zip(u, w):
        if a != b:
            break
        n += 1
    return n


def all_words(depth):
    '''
    All 2^depth words of the given length, in lexicographic order.
    '''
    return [''.join(bits) for bits in itertools.product('01', repeat=depth)]


def words_up_to(depth):
    '''
    All words of length at most `depth`, shortest first and then
    lexicographically.
    '''
    result = []
    for n in range(depth + 1):
        result.extend(all_words(n))
    return result


def cylinder_diameter(word):
    '''
    With d(x,y) = 2^(-k) where k is the length of the longest common prefix,
    the cylinder [w] has diameter 2^(-|w|).
    '''
    return Fraction(1, 2 ** len(word))


def breadth_first_words(count, start_depth=1):
    '''
    The first `count` words of the breadth-first enumeration
    0, 1, 00, 01, 10, 11, 000, ...
    '''
    result = []
    depth = start_depth
    while len(result) < count:
        for w in all_words(depth):
            result.append(w)
            if len(result) == count:
                break
        depth += 1
    return result

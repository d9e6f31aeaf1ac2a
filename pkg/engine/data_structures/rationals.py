'''
Exact rationals.  Everything in the core is a `fractions.Fraction`;
at the JSON boundary a rational is the string "a/b" (or "a" for an
integer).
'''
import re
from fractions import Fraction
from math import gcd

from engine.exceptions import OutOfRangeException

RATIONAL_PATTERN = re.compile(r'-?\d+(/\d+)?')


def parse_rational(value):
    '''
    Accepts an int, a `Fraction` or a string like "3/8".  Floats are
    refused since they cannot carry exact values.
    '''
    if isinstance(value, bool):
        raise OutOfRangeException('The value {v} is not a rational'
            ' number.'.format(v=value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str) and RATIONAL_PATTERN.fullmatch(value.strip()):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise OutOfRangeException('The rational "{v}" has a zero'
                ' denominator.'.format(v=value))
    raise OutOfRangeException('The value "{v}" could not be read as an'
        ' exact rational. Use strings such as "1/3".'.format(v=value))


def format_rational(value):
    return str(Fraction(value))


def rational_gcd(a, b):
    '''
    The largest rational g such that a/g and b/g are both integers.
    gcd(0, b) = b.
    '''
    a = Fraction(a)
    b = Fraction(b)
    if a == 0:
        return abs(b)
    if b == 0:
        return abs(a)
    denominator = a.denominator * b.denominator
    return Fraction(
        gcd(a.numerator * b.denominator, b.numerator * a.denominator),
        denominator)


def is_integer_multiple(value, unit):
    return unit != 0 and (Fraction(value) / unit).denominator == 1


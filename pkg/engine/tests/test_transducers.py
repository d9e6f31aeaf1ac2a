import random
import unittest
from fractions import Fraction

from hypothesis import given, \
    settings as hypothesis_settings, \
    strategies as st

from engine.data_structures import ClopenSet, \
    TransducerMap, \
    PrefixExchange
from engine.data_structures.words import all_words
from engine.data_structures.outcomes import ExactDistance, \
    DistanceBound, \
    Surjective, \
    NotSurjective, \
    Injective, \
    NotInjective, \
    InjectivityUnknown
from engine.exceptions import InvalidTransducerException, \
    StarvingTransducerException, \
    InvalidExchangeException
from engine.utilities import identity_map, \
    constant_map, \
    first_bit_flip, \
    fold_map, \
    map_from_rules, \
    from_prefix_exchange, \
    evaluate, \
    preimage_clopen, \
    compose, \
    sup_distance, \
    surjectivity_decide, \
    injectivity_certificate
from engine.utilities.certificate_utils import _verify_not_injective
from engine.tests.strategies import word_lists, \
    random_clopen, \
    exchange_compositions


def brute_force_preimage(f, clopen, depth):
    '''
    The depth-`depth` inputs whose image is decided to lie in `clopen`.
    '''
    inside = set()
    for x in all_words(depth):
        out = f.evaluate(x)
        if any(out.startswith(w) for w in clopen.antichain):
            inside.add(x)
    return inside


def exchange_corpus():
    return [
        PrefixExchange([('', '')]),
        PrefixExchange([('0', '1'), ('1', '0')]),
        PrefixExchange([('00', '00'), ('11', '01'), ('01', '10'), ('10', '11')]),
        PrefixExchange([('0', '10'), ('10', '0'), ('11', '11')]),
        PrefixExchange([('000', '1'), ('001', '01'), ('01', '001'), ('1', '000')]),
    ]


class TestTransducerConstruction(unittest.TestCase):

    def test_missing_transition(self):
        with self.assertRaises(InvalidTransducerException):
            TransducerMap(['a'], 'a', {('a', '0'): ('0', 'a')})

    def test_unknown_state(self):
        with self.assertRaises(InvalidTransducerException):
            TransducerMap(['a'], 'a', {('a', '0'): ('0', 'a'), ('a', '1'): ('1', 'b')})

    def test_bad_output(self):
        with self.assertRaises(InvalidTransducerException):
            TransducerMap(['a'], 'a', {('a', '0'): ('2', 'a'), ('a', '1'): ('1', 'a')})

    def test_starving_cycle(self):
        transitions = {
            ('a', '0'): ('', 'b'), ('a', '1'): ('1', 'a'),
            ('b', '0'): ('', 'a'), ('b', '1'): ('0', 'b'),
        }
        with self.assertRaises(StarvingTransducerException):
            TransducerMap(['a', 'b'], 'a', transitions)

    def test_unreachable_silent_cycle_is_pruned(self):
        transitions = {
            ('a', '0'): ('0', 'a'), ('a', '1'): ('1', 'a'),
            ('z', '0'): ('', 'z'), ('z', '1'): ('', 'z'),
        }
        f = TransducerMap(['a', 'z'], 'a', transitions)
        self.assertEqual(f.states, ('a',))

    def test_fold_has_three_states(self):
        self.assertEqual(set(fold_map().states), {'start', 'copy', 'flip'})


class TestEvaluation(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(evaluate(identity_map(), '0110'), '0110')
        self.assertEqual(evaluate(fold_map(), '00'), '0')
        self.assertEqual(evaluate(fold_map(), '10'), '1')
        self.assertEqual(evaluate(fold_map(), '01'), '1')

    @given(st.text(alphabet='01', max_size=10), st.sampled_from('01'))
    @hypothesis_settings(max_examples=100, deadline=None)
    def test_monotone(self, word, bit):
        for f in (fold_map(), first_bit_flip(), identity_map()):
            self.assertTrue(f.evaluate(word + bit).startswith(f.evaluate(word)))

    def test_periodic(self):
        self.assertEqual(fold_map().evaluate_periodic('1', '0', 4), '1111')


class TestPreimages(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(preimage_clopen(identity_map(), ClopenSet(['01'])), ClopenSet(['01']))
        self.assertEqual(preimage_clopen(fold_map(), ClopenSet(['0'])), ClopenSet(['00', '11']))
        self.assertEqual(preimage_clopen(fold_map(), ClopenSet(['1'])), ClopenSet(['01', '10']))
        self.assertTrue(preimage_clopen(fold_map(), ClopenSet.whole()).is_whole())
        self.assertTrue(preimage_clopen(constant_map('0'), ClopenSet(['1'])).is_empty())

    @given(word_lists)
    @hypothesis_settings(max_examples=60, deadline=None)
    def test_oracle(self, word_list):
        # every map below emits at least |x| - 3 bits on an input x, so
        # inputs of length 9 decide membership in sets of depth 6
        clopen = ClopenSet([w[:6] for w in word_list])
        maps = [identity_map(), fold_map(), first_bit_flip()]
        maps.extend(from_prefix_exchange(p) for p in exchange_corpus())
        for f in maps:
            depth = 9
            pre = preimage_clopen(f, clopen)
            self.assertLessEqual(pre.depth, depth)
            expected = brute_force_preimage(f, clopen, depth)
            actual = {x for x in all_words(depth)
                if any(x.startswith(w) for w in pre.antichain)}
            self.assertEqual(actual, expected)

    def test_oracle_at_depth_twelve(self):
        # every map below emits at least |x| - 3 bits on an input x, so
        # inputs of length 12 decide membership in sets of depth 8
        rng = random.Random(12)
        sets = [random_clopen(rng) for _ in range(6)]
        maps = [identity_map(), fold_map(), first_bit_flip()]
        maps.extend(exchange_compositions())
        for f in maps:
            images = {x: f.evaluate(x) for x in all_words(12)}
            for clopen in sets:
                pre = preimage_clopen(f, clopen)
                self.assertLessEqual(pre.depth, 12)
                expected = {x for x, out in images.items()
                    if any(out.startswith(w) for w in clopen.antichain)}
                actual = {x for x in images
                    if any(x.startswith(w) for w in pre.antichain)}
                self.assertEqual(actual, expected)


class TestConversions(unittest.TestCase):

    def test_identity_exchange(self):
        f = from_prefix_exchange(PrefixExchange([('', '')]))
        self.assertIsInstance(sup_distance(f, identity_map(), 12), DistanceBound)

    def test_flip_exchange(self):
        f = from_prefix_exchange(PrefixExchange([('0', '1'), ('1', '0')]))
        self.assertIsInstance(sup_distance(f, first_bit_flip(), 12), DistanceBound)

    def test_rule_map(self):
        f = from_prefix_exchange(PrefixExchange(
            [('00', '00'), ('11', '01'), ('01', '10'), ('10', '11')]))
        self.assertEqual(f.evaluate('110'), '010')
        self.assertEqual(f.evaluate('1'), '')

    def test_needs_whole_space(self):
        p = PrefixExchange([('00', '0')], source=ClopenSet(['00']), target=ClopenSet(['0']))
        with self.assertRaises(InvalidExchangeException):
            from_prefix_exchange(p)

    def test_many_to_one_rules(self):
        f = map_from_rules([('0', ''), ('1', '')])
        self.assertEqual(f.evaluate('0101'), '101')
        self.assertEqual(f.evaluate('1101'), '101')
        with self.assertRaises(InvalidExchangeException):
            map_from_rules([('0', '1')])


class TestComposition(unittest.TestCase):

    def test_identity_is_neutral(self):
        self.assertIsInstance(sup_distance(compose(identity_map(), fold_map()),
            fold_map(), 12), DistanceBound)
        self.assertIsInstance(sup_distance(compose(fold_map(), identity_map()),
            fold_map(), 12), DistanceBound)

    def test_flip_twice(self):
        h = compose(first_bit_flip(), first_bit_flip())
        for x in all_words(3):
            self.assertEqual(h.evaluate(x), x)

    def test_order(self):
        # fold then flip: 0x -> flip first bit of x
        h = compose(fold_map(), first_bit_flip())
        self.assertEqual(h.evaluate('001'), '11')

    def test_associative(self):
        f, g, h = fold_map(), first_bit_flip(), from_prefix_exchange(exchange_corpus()[3])
        left = compose(compose(f, g), h)
        right = compose(f, compose(g, h))
        for depth in (4, 8, 16):
            self.assertIsInstance(sup_distance(left, right, depth), DistanceBound)


class TestSupDistance(unittest.TestCase):

    def test_equal_maps(self):
        for depth in (1, 5, 10):
            self.assertEqual(sup_distance(fold_map(), fold_map(), depth),
                DistanceBound(Fraction(1, 2 ** depth)))

    def test_fold_against_identity(self):
        self.assertEqual(sup_distance(fold_map(), identity_map(), 4),
            ExactDistance(Fraction(1), '01'))

    def test_fold_against_its_approximation(self):
        g = from_prefix_exchange(PrefixExchange(
            [('00', '00'), ('11', '01'), ('01', '10'), ('10', '11')]))
        outcome = sup_distance(fold_map(), g, 5)
        self.assertIsInstance(outcome, ExactDistance)
        self.assertEqual(outcome.value, Fraction(1, 2))

    def test_symmetry_and_triangle(self):
        maps = [fold_map(), identity_map(), first_bit_flip(),
            from_prefix_exchange(exchange_corpus()[2])]

        def d(f, g):
            return sup_distance(f, g, 10).value

        for f in maps:
            for g in maps:
                self.assertEqual(d(f, g), d(g, f))
                for h in maps:
                    self.assertLessEqual(d(f, h), max(d(f, g), d(g, h)))
                    self.assertLessEqual(d(f, h), d(f, g) + d(g, h))


class TestSurjectivity(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(surjectivity_decide(fold_map()), Surjective())
        self.assertEqual(surjectivity_decide(identity_map()), Surjective())
        self.assertEqual(surjectivity_decide(constant_map('0')), NotSurjective('1'))

    def test_shortest_witness(self):
        # every input begins its image with 1 followed by a copy
        transitions = {('a', b): ('1' + b, 'c') for b in '01'}
        transitions.update({('c', b): (b, 'c') for b in '01'})
        f = TransducerMap(['a', 'c'], 'a', transitions)
        self.assertEqual(surjectivity_decide(f), NotSurjective('0'))

    def test_exchanges_are_surjective(self):
        for p in exchange_corpus():
            self.assertEqual(surjectivity_decide(from_prefix_exchange(p)), Surjective())


class TestInjectivity(unittest.TestCase):

    def test_identity(self):
        outcome = injectivity_certificate(identity_map(), 8)
        self.assertEqual(outcome, Injective([(n, n) for n in range(1, 9)]))

    def test_fold(self):
        outcome = injectivity_certificate(fold_map(), 8)
        self.assertEqual(outcome, NotInjective('0', '0', '1', '1'))
        self.assertEqual(_verify_not_injective(fold_map(), outcome.to_representation()), [])
        self.assertEqual(fold_map().evaluate_periodic('0', '0', 6),
            fold_map().evaluate_periodic('1', '1', 6))

    def test_constant(self):
        outcome = injectivity_certificate(constant_map('1'), 4)
        self.assertIsInstance(outcome, NotInjective)
        self.assertTrue(outcome.is_negative)

    def test_exchanges_are_injective(self):
        for p in exchange_corpus():
            outcome = injectivity_certificate(from_prefix_exchange(p), 6)
            self.assertIsInstance(outcome, Injective)
            self.assertEqual(len(outcome.separation), 6)

    def test_unbounded_drift(self):
        # on the branch 1 the machine emits two bits per input bit, on the
        # branch 0 one; the unmatched output then grows without bound
        transitions = {
            ('s', '0'): ('', 'one'), ('s', '1'): ('', 'two'),
            ('one', '0'): ('0', 'one'), ('one', '1'): ('1', 'one'),
            ('two', '0'): ('00', 'two'), ('two', '1'): ('11', 'two'),
        }
        f = TransducerMap(['s', 'one', 'two'], 's', transitions)
        outcome = injectivity_certificate(f, 3)
        self.assertEqual(outcome, InjectivityUnknown(3))
        self.assertTrue(outcome.is_exhausted)

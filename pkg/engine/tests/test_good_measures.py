import unittest
from fractions import Fraction

from django.test import override_settings

from engine.data_structures import ClopenSet, \
    BernoulliMeasure, \
    TableMeasure, \
    ValueSample
from engine.data_structures.words import all_words
from engine.data_structures.outcomes import GroupLike, \
    Counterexample, \
    Found, \
    NotFoundUpToDepth, \
    ConsistentUpTo, \
    Obstruction, \
    FailedAtBudget, \
    Injective, \
    Surjective, \
    Preserved, \
    ValuesIncluded, \
    ValueMissing
from engine.exceptions import MalformedValueSetException, \
    OutOfRangeException, \
    ResourceLimitException, \
    TotalMismatchException, \
    PreservationViolatedException, \
    BudgetExhaustedException
from engine.utilities import clopen_values, \
    restricted_values, \
    group_like_check, \
    find_clopen_subset, \
    goodness_scan, \
    measure_clopen_iso, \
    approx_measure_homeo, \
    half_fold, \
    value_inclusion_check, \
    identity_map, \
    fold_map, \
    from_prefix_exchange, \
    sup_distance, \
    check_preserves, \
    injectivity_certificate, \
    surjectivity_decide
from engine.utilities.good_measure_utils import default_budget

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


class TestClopenValues(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(clopen_values(BernoulliMeasure(HALF), 2).values,
            tuple(Fraction(k, 4) for k in range(5)))
        self.assertEqual(clopen_values(BernoulliMeasure(THIRD), 2).values,
            tuple(Fraction(k, 9) for k in range(10)))
        self.assertEqual(clopen_values(BernoulliMeasure(THIRD, total=3), 0).values,
            (0, 3))

    def test_nested_depths(self):
        m = BernoulliMeasure(THIRD)
        for d in range(0, 6):
            shallow = set(clopen_values(m, d))
            self.assertTrue(shallow.issubset(set(clopen_values(m, d + 1))))

    def test_gaps(self):
        # consecutive values are never further apart than the heaviest cylinder
        cases = [(BernoulliMeasure(HALF), 10), (BernoulliMeasure(THIRD), 10),
            (BernoulliMeasure(Fraction(2, 5)), 6)]
        for m, max_depth in cases:
            for d in range(0, max_depth + 1):
                values = clopen_values(m, d).values
                gap = max(b - a for a, b in zip(values, values[1:]))
                self.assertLessEqual(gap, m.max_cylinder_weight(d))

    def test_resource_limit(self):
        with override_settings(MAX_VALUES_DEPTH=3):
            with self.assertRaises(ResourceLimitException):
                clopen_values(BernoulliMeasure(HALF), 4)
        with self.assertRaises(OutOfRangeException):
            clopen_values(BernoulliMeasure(HALF), -1)

    def test_value_count_limit(self):
        with override_settings(MAX_VALUE_COUNT=10):
            with self.assertRaises(ResourceLimitException):
                clopen_values(BernoulliMeasure(THIRD), 3)

    def test_restriction(self):
        m = BernoulliMeasure(HALF)
        for w in ('0', '01', '110'):
            for d in range(len(w), 7):
                restricted = restricted_values(m, ClopenSet([w]), d)
                full = clopen_values(m, d)
                self.assertEqual(set(restricted),
                    {v for v in full if v <= m.weight(w)})

    def test_value_sample_requires_endpoints(self):
        with self.assertRaises(MalformedValueSetException):
            ValueSample(1, [Fraction(1, 2), 1], 1)
        self.assertIn(HALF, ValueSample(1, [0, HALF, 1], 1))


class TestGroupLike(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(group_like_check([0, Fraction(1, 4), HALF, Fraction(3, 4), 1]),
            GroupLike())
        self.assertEqual(group_like_check([0, Fraction(1, 5), HALF, 1]),
            Counterexample(Fraction(1, 5), HALF, Fraction(3, 10)))
        self.assertEqual(group_like_check([0, 1]), GroupLike())

    def test_scaled_total(self):
        self.assertEqual(group_like_check([0, 1, 2, 3], total=3), GroupLike())
        outcome = group_like_check([0, 1, 3, 4], total=4)
        self.assertEqual(outcome, Counterexample(Fraction(1, 4), Fraction(3, 4), HALF))

    def test_malformed(self):
        with self.assertRaises(MalformedValueSetException):
            group_like_check([Fraction(1, 4), 1])
        with self.assertRaises(MalformedValueSetException):
            group_like_check([0, HALF], total=1)
        with self.assertRaises(MalformedValueSetException):
            group_like_check([])

    def test_clopen_values_are_group_like(self):
        for m in (BernoulliMeasure(HALF), BernoulliMeasure(THIRD)):
            for d in range(0, 9):
                self.assertEqual(group_like_check(clopen_values(m, d)), GroupLike())


class TestFindClopenSubset(unittest.TestCase):

    def test_examples(self):
        fair = BernoulliMeasure(HALF)
        self.assertEqual(find_clopen_subset(fair, ClopenSet(['0']), Fraction(3, 8), 6),
            Found(ClopenSet(['00', '010'])))
        b = ClopenSet(['01', '1'])
        self.assertEqual(find_clopen_subset(fair, b, fair.measure_of(b), 2), Found(b))
        self.assertEqual(find_clopen_subset(fair, b, 0, 2), Found(ClopenSet.empty()))

    def test_exact_measure_inside(self):
        m = BernoulliMeasure(THIRD)
        b = ClopenSet(['0', '11'])
        for value in clopen_values(m, 3):
            if value > m.measure_of(b):
                break
            outcome = find_clopen_subset(m, b, value, 8)
            if isinstance(outcome, Found):
                self.assertEqual(m.measure_of(outcome.clopen), value)
                self.assertTrue(outcome.clopen.is_subset_of(b))
                self.assertLessEqual(outcome.clopen.depth, 8)

    def test_not_found_is_not_a_refutation(self):
        m = BernoulliMeasure(THIRD)
        outcome = find_clopen_subset(m, ClopenSet(['1']), Fraction(1, 9), 10)
        self.assertEqual(outcome, NotFoundUpToDepth(10))
        self.assertTrue(outcome.is_exhausted)
        self.assertFalse(outcome.is_negative)

    def test_node_limit(self):
        m = BernoulliMeasure(THIRD)
        outcome = find_clopen_subset(m, ClopenSet.whole(), Fraction(13, 81), 12, node_limit=1)
        self.assertIsInstance(outcome, NotFoundUpToDepth)
        self.assertTrue(outcome.node_limit_reached)

    def test_out_of_range(self):
        with self.assertRaises(OutOfRangeException):
            find_clopen_subset(BernoulliMeasure(HALF), ClopenSet(['0']), Fraction(3, 4), 4)


class TestGoodnessScan(unittest.TestCase):

    def test_fair_coin(self):
        self.assertEqual(goodness_scan(BernoulliMeasure(HALF), 3, 8), ConsistentUpTo(3))

    def test_one_third(self):
        # 1/9 is a clopen value but every cylinder inside [1] has an even
        # numerator over a power of 3
        outcome = goodness_scan(BernoulliMeasure(THIRD), 2, 10)
        self.assertEqual(outcome, Obstruction(ClopenSet(['00']), ClopenSet(['1']),
            Fraction(1, 9), 10))

    def test_table_obstruction(self):
        m = TableMeasure(1, {'0': '2/5', '1': '3/5'}, '1/2')
        outcome = goodness_scan(m, 1, 4)
        self.assertEqual(outcome, Obstruction(ClopenSet(['0']), ClopenSet(['1']),
            Fraction(2, 5), 4))
        self.assertTrue(outcome.is_exhausted)

    def test_arguments(self):
        with self.assertRaises(OutOfRangeException):
            goodness_scan(BernoulliMeasure(HALF), 0, 4)


class TestMeasureClopenIso(unittest.TestCase):

    def setUp(self):
        self.fair = BernoulliMeasure(HALF)

    def test_examples(self):
        p = measure_clopen_iso(self.fair, self.fair, ClopenSet(['0']), ClopenSet(['1']))
        self.assertEqual(p.rules, (('0', '1'),))
        p = measure_clopen_iso(self.fair, self.fair, ClopenSet(['00', '11']), ClopenSet(['0']))
        self.assertEqual(p.rules, (('00', '00'), ('11', '01')))

    def test_dyadic_against_triadic(self):
        outcome = measure_clopen_iso(self.fair, BernoulliMeasure(THIRD),
            ClopenSet.whole(), ClopenSet.whole(), 8)
        self.assertIsInstance(outcome, FailedAtBudget)
        self.assertEqual(len(outcome.hypotheses), 2)

    def test_total_mismatch(self):
        with self.assertRaises(TotalMismatchException):
            measure_clopen_iso(self.fair, self.fair, ClopenSet(['0']), ClopenSet(['10']))

    def test_rules_preserve_measure(self):
        m = BernoulliMeasure(THIRD)
        a = ClopenSet(['00', '011', '1'])
        b = ClopenSet(['000', '01', '1'])
        self.assertEqual(m.measure_of(a), m.measure_of(b))
        p = measure_clopen_iso(m, m, a, b)
        self.assertNotIsInstance(p, FailedAtBudget)
        for u, v in p.rules:
            self.assertEqual(m.weight(u), m.weight(v))

    def test_whole_space_exchange_is_preserving(self):
        m = BernoulliMeasure(THIRD)
        a = ClopenSet(['00', '11'])
        b = ClopenSet(['0', '10'])
        first = measure_clopen_iso(m, m, a, b)
        second = measure_clopen_iso(m, m, a.complement(), b.complement())
        g = first.merge(second)
        f = from_prefix_exchange(g)
        self.assertEqual(check_preserves(f, m, m, g.rule_depth), Preserved(g.rule_depth))
        self.assertIsInstance(injectivity_certificate(f, 8), Injective)


class TestApproxMeasureHomeo(unittest.TestCase):

    def setUp(self):
        self.fair = BernoulliMeasure(HALF)

    def test_fold_depth_one(self):
        g = approx_measure_homeo(fold_map(), self.fair, self.fair, 1)
        self.assertEqual(set(g.rules),
            {('00', '00'), ('11', '01'), ('01', '10'), ('10', '11')})

    def test_density(self):
        for n in range(1, 9):
            g = approx_measure_homeo(fold_map(), self.fair, self.fair, n)
            self.assertTrue(g.is_self_homeomorphism())
            for u, v in g.rules:
                self.assertEqual(self.fair.weight(u), self.fair.weight(v))
            h = from_prefix_exchange(g)
            self.assertLessEqual(sup_distance(fold_map(), h, n + 4).value, Fraction(1, 2 ** n))
            self.assertEqual(check_preserves(h, self.fair, self.fair, g.rule_depth),
                Preserved(g.rule_depth))

    def test_identity(self):
        m = BernoulliMeasure(THIRD)
        g = approx_measure_homeo(identity_map(), m, m, 2)
        self.assertEqual(g.rules, tuple((w, w) for w in all_words(2)))

    def test_preservation_violated(self):
        m = BernoulliMeasure(THIRD)
        with self.assertRaises(PreservationViolatedException) as cm:
            approx_measure_homeo(fold_map(), m, m, 1)
        self.assertEqual(cm.exception.outcome.witness, '0')

    def test_different_measures(self):
        with self.assertRaises(PreservationViolatedException):
            approx_measure_homeo(identity_map(), self.fair, BernoulliMeasure(THIRD), 1)


class TestHalfFold(unittest.TestCase):

    def test_fair_coin_gives_the_shift(self):
        fair = BernoulliMeasure(HALF)
        f = half_fold(fair)
        self.assertEqual(f.evaluate('0110'), '110')
        self.assertEqual(f.evaluate('1110'), '110')
        self.assertEqual(check_preserves(f, fair, fair, 6), Preserved(6))
        self.assertEqual(surjectivity_decide(f), Surjective())

    def test_one_third_has_no_half(self):
        with self.assertRaises(BudgetExhaustedException):
            half_fold(BernoulliMeasure(THIRD), 12)

    def test_table_with_half_split(self):
        m = TableMeasure(1, {'0': '1/2', '1': '1/2'}, '1/2')
        f = half_fold(m, 4)
        self.assertEqual(check_preserves(f, m, m, 4), Preserved(4))
        self.assertEqual(f.evaluate('01'), '1')

    def test_two_to_one(self):
        fair = BernoulliMeasure(HALF)
        outcome = injectivity_certificate(half_fold(fair), 8)
        self.assertTrue(outcome.is_negative)


class TestValueInclusion(unittest.TestCase):

    def test_fold(self):
        fair = BernoulliMeasure(HALF)
        self.assertEqual(value_inclusion_check(fold_map(), fair, fair, 3), ValuesIncluded(3))

    def test_missing_value(self):
        # the identity pushes the fair coin forward to itself, so the
        # values of B(1/3) are not among its values
        outcome = value_inclusion_check(identity_map(), BernoulliMeasure(HALF),
            BernoulliMeasure(THIRD), 1)
        self.assertEqual(outcome, ValueMissing(THIRD))


class TestBudget(unittest.TestCase):

    def test_default_budget(self):
        self.assertEqual(default_budget(3, 5), 5 + 16)
        self.assertEqual(default_budget(), 16)

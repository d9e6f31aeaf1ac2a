import unittest
from fractions import Fraction

from hypothesis import given, \
    settings as hypothesis_settings
from rest_framework.exceptions import ValidationError

from engine.data_structures import ClopenSet, \
    ClopenPartition, \
    canonicalize, \
    boolean_op, \
    common_refinement, \
    diameter, \
    mesh
from engine.data_structures.words import normalize_word, \
    sibling, \
    words_up_to, \
    breadth_first_words
from engine.exceptions import InvalidWordException, \
    InvalidClopenException, \
    AmbientMismatchException
from engine.tests.strategies import word_lists, \
    clopen_sets, \
    members


def P(*cells):
    return ClopenPartition([ClopenSet(c) for c in cells])


class TestWords(unittest.TestCase):

    def test_normalize_rejects_other_characters(self):
        self.assertEqual(normalize_word('0110'), '0110')
        self.assertEqual(normalize_word(''), '')
        with self.assertRaises(InvalidWordException):
            normalize_word('012')
        with self.assertRaises(InvalidWordException):
            normalize_word(101)

    def test_invalid_word_is_a_validation_error(self):
        # the CLI relies on this to report exit code 2
        with self.assertRaises(ValidationError):
            ClopenSet(['0a'])

    def test_sibling(self):
        self.assertEqual(sibling('010'), '011')
        self.assertEqual(sibling('1'), '0')

    def test_enumerations(self):
        self.assertEqual(words_up_to(2), ['', '0', '1', '00', '01', '10', '11'])
        self.assertEqual(breadth_first_words(4), ['0', '1', '00', '01'])


class TestCanonicalize(unittest.TestCase):

    def test_sibling_merge(self):
        self.assertEqual(canonicalize(['00', '01']).antichain, ('0',))

    def test_prefix_absorption(self):
        self.assertEqual(canonicalize(['0', '01']).antichain, ('0',))

    def test_mixed(self):
        self.assertEqual(canonicalize(['00', '11', '01']).antichain, ('0', '11'))

    def test_cascading_merge(self):
        self.assertTrue(canonicalize(['000', '001', '01', '1']).is_whole())

    def test_empty_and_whole(self):
        self.assertTrue(ClopenSet([]).is_empty())
        self.assertTrue(ClopenSet(['']).is_whole())
        self.assertEqual(ClopenSet.whole().to_representation(), {'antichain': ['']})

    @given(word_lists)
    @hypothesis_settings(max_examples=1000, deadline=None)
    def test_membership_and_idempotence(self, word_list):
        a = canonicalize(word_list)
        self.assertEqual(members(a.antichain), members(word_list))
        self.assertEqual(canonicalize(a.antichain), a)
        # canonical: prefix-free, no sibling pairs, sorted
        words = a.antichain
        self.assertEqual(list(words), sorted(words))
        for u in words:
            for v in words:
                if u != v:
                    self.assertFalse(v.startswith(u))
            if u:
                self.assertNotIn(sibling(u), words)

    @given(word_lists, word_lists)
    @hypothesis_settings(max_examples=200, deadline=None)
    def test_equality_is_set_equality(self, first, second):
        self.assertEqual(ClopenSet(first) == ClopenSet(second),
            members(first) == members(second))

    def test_quotient(self):
        a = ClopenSet(['00', '11'])
        self.assertEqual(a.quotient('0'), ClopenSet(['0']))
        self.assertEqual(a.quotient('00'), ClopenSet.whole())
        self.assertEqual(a.quotient('10'), ClopenSet.empty())

    def test_cylinder_tests(self):
        a = ClopenSet(['00', '11'])
        self.assertTrue(a.contains_cylinder('001'))
        self.assertFalse(a.contains_cylinder('0'))
        self.assertTrue(a.meets_cylinder('0'))
        self.assertTrue(a.meets_cylinder('110'))
        self.assertFalse(a.meets_cylinder('01'))

    def test_refined_to(self):
        self.assertEqual(ClopenSet(['0', '11']).refined_to(2), ['00', '01', '11'])
        with self.assertRaises(InvalidClopenException):
            ClopenSet(['000']).refined_to(2)


class TestBooleanOperations(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(boolean_op('complement', ClopenSet(['0'])), ClopenSet(['1']))
        self.assertEqual(boolean_op('boolean_sum', ClopenSet(['0']), ClopenSet(['00'])),
            ClopenSet(['01']))
        self.assertTrue(boolean_op('intersection', ClopenSet(['0']),
            ClopenSet(['11'])).is_empty())
        self.assertTrue(boolean_op('union', ClopenSet(['0']), ClopenSet(['1'])).is_whole())

    def test_argument_counts(self):
        with self.assertRaises(InvalidClopenException):
            boolean_op('complement', ClopenSet(['0']), ClopenSet(['1']))
        with self.assertRaises(InvalidClopenException):
            boolean_op('union', ClopenSet(['0']))
        with self.assertRaises(InvalidClopenException):
            boolean_op('xor', ClopenSet(['0']), ClopenSet(['1']))

    @given(word_lists, word_lists)
    @hypothesis_settings(max_examples=1000, deadline=None)
    def test_oracle(self, first, second):
        a, b = ClopenSet(first), ClopenSet(second)
        ma, mb = members(first), members(second)
        everything = members([''])
        self.assertEqual(members(a.union(b).antichain), ma | mb)
        self.assertEqual(members(a.intersection(b).antichain), ma & mb)
        self.assertEqual(members(a.complement().antichain), everything - ma)
        self.assertEqual(members(a.boolean_sum(b).antichain), ma ^ mb)
        self.assertEqual(members(a.difference(b).antichain), ma - mb)

    @given(clopen_sets, clopen_sets, clopen_sets)
    @hypothesis_settings(max_examples=150, deadline=None)
    def test_laws(self, a, b, c):
        self.assertEqual(a.union(b).complement(),
            a.complement().intersection(b.complement()))
        self.assertEqual(a.intersection(b).complement(),
            a.complement().union(b.complement()))
        self.assertEqual(a.union(b).union(c), a.union(b.union(c)))
        self.assertEqual(a.intersection(b).intersection(c),
            a.intersection(b.intersection(c)))
        self.assertEqual(a.boolean_sum(b).boolean_sum(c),
            a.boolean_sum(b.boolean_sum(c)))
        self.assertTrue(a.boolean_sum(a).is_empty())
        self.assertTrue(a.intersection(a.complement()).is_empty())
        self.assertEqual(a.complement().complement(), a)


class TestPartitions(unittest.TestCase):

    def test_overlapping_cells_rejected(self):
        with self.assertRaises(InvalidClopenException):
            P(['0'], ['01', '1'])

    def test_incomplete_cover_rejected(self):
        with self.assertRaises(AmbientMismatchException):
            P(['0'], ['10'])

    def test_empty_cell_rejected(self):
        with self.assertRaises(InvalidClopenException):
            ClopenPartition([ClopenSet(['']), ClopenSet([])])

    def test_stated_ambient(self):
        p = ClopenPartition([ClopenSet(['00']), ClopenSet(['01'])], ambient=ClopenSet(['0']))
        self.assertEqual(len(p), 2)
        with self.assertRaises(AmbientMismatchException):
            common_refinement(p, P(['0'], ['1']))

    def test_common_refinement_examples(self):
        self.assertEqual(common_refinement(P(['0'], ['1']), P(['00'], ['01'], ['1'])),
            P(['00'], ['01'], ['1']))
        self.assertEqual(common_refinement(P(['0'], ['1']), P(['0', '10'], ['11'])),
            P(['0'], ['10'], ['11']))
        p = P(['0', '11'], ['10'])
        self.assertEqual(common_refinement(p, p), p)

    def test_refinement_properties(self):
        p1 = P(['0', '11'], ['10'])
        p2 = P(['00', '1'], ['01'])
        r = common_refinement(p1, p2)
        self.assertTrue(r.refines(p1))
        self.assertTrue(r.refines(p2))
        self.assertLessEqual(mesh(r), min(mesh(p1), mesh(p2)))

    def test_mesh_examples(self):
        self.assertEqual(mesh(P(['0'], ['1'])), Fraction(1, 2))
        self.assertEqual(mesh(P(['00'], ['01'], ['1'])), Fraction(1, 2))
        self.assertEqual(mesh(P([''])), 1)

    def test_diameter(self):
        self.assertEqual(diameter(ClopenSet(['000', '011'])), Fraction(1, 2))
        self.assertEqual(diameter(ClopenSet(['010'])), Fraction(1, 8))
        self.assertEqual(diameter(ClopenSet(['0', '1'])), 1)
        self.assertEqual(diameter(ClopenSet([])), 0)

    def test_cylinder_partition(self):
        p = ClopenPartition.cylinders(2)
        self.assertEqual(len(p), 4)
        self.assertEqual(list(p), [ClopenSet([w]) for w in ('00', '01', '10', '11')])
        self.assertEqual(len(ClopenPartition.cylinders(2, ClopenSet(['0', '11']))), 3)

    def test_partition_of_the_empty_set(self):
        empty = ClopenPartition([], ClopenSet.empty())
        self.assertEqual(len(empty), 0)
        self.assertEqual(mesh(empty), 0)

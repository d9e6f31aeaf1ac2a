import os
import unittest
import unittest.mock as mock

from django.core.exceptions import ImproperlyConfigured

from cantorkit.base_settings import get_int_env


class TestIntegerEnvironment(unittest.TestCase):

    @mock.patch.dict(os.environ, {}, clear=True)
    def test_default(self):
        self.assertEqual(get_int_env('BUDGET_SLACK', 16), 16)

    @mock.patch.dict(os.environ, {'BUDGET_SLACK': '24'})
    def test_override(self):
        self.assertEqual(get_int_env('BUDGET_SLACK', 16), 24)

    @mock.patch.dict(os.environ, {'BUDGET_SLACK': 'many'})
    def test_not_an_integer(self):
        with self.assertRaises(ImproperlyConfigured):
            get_int_env('BUDGET_SLACK', 16)

    @mock.patch.dict(os.environ, {'MAX_VALUES_DEPTH': '0'})
    def test_not_positive(self):
        with self.assertRaises(ImproperlyConfigured):
            get_int_env('MAX_VALUES_DEPTH', 14)

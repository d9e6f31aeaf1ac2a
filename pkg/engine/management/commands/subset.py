from engine.data_structures.rationals import parse_rational
from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import MeasureSerializer, \
    ClopenSetSerializer
from engine.utilities import find_clopen_subset
from engine.utilities.good_measure_utils import default_budget


class Command(CertifyingCommand):
    help = ('Searches for a clopen subset of a set with a prescribed measure.'
        '  Exits with 3 when none is found within the budget.')

    def add_command_arguments(self, parser):
        parser.add_argument('--measure', required=True, help='A measure (JSON or file).')
        parser.add_argument('--set', required=True, help='The clopen set B to search in.')
        parser.add_argument('--target', required=True, help='The measure t, e.g. "3/8".')
        parser.add_argument('--budget', type=int, default=None,
            help='The longest word the subset may use.')

    def compute(self, **options):
        m = self.load(MeasureSerializer, options['measure'], '--measure')
        b = self.load(ClopenSetSerializer, options['set'], '--set')
        t = parse_rational(options['target'])
        budget = options['budget']
        if budget is None:
            budget = default_budget(b.depth)
        return CommandResult.from_outcome(find_clopen_subset(m, b, t, budget))

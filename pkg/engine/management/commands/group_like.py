from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import ValueSetSerializer
from engine.utilities import group_like_check


class Command(CertifyingCommand):
    help = ('Checks that t - s belongs to a set of values for all s <= t in'
        ' it.  Exits with 1 on a counterexample.')

    def add_command_arguments(self, parser):
        parser.add_argument('--values', required=True,
            help='A JSON list of rationals, or {"values": [...], "total": ...},'
                ' or the output of the values command.')

    def compute(self, **options):
        values, total = self.load(ValueSetSerializer, options['values'], '--values')
        return CommandResult.from_outcome(group_like_check(values, total))

from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import MeasureSerializer
from engine.utilities import goodness_scan


class Command(CertifyingCommand):
    help = ('Audits the subset condition on all values and cylinders up to a'
        ' depth.  Exits with 3 on an unresolved instance.')

    def add_command_arguments(self, parser):
        parser.add_argument('--measure', required=True, help='A measure (JSON or file).')
        parser.add_argument('--depth', type=int, required=True)
        parser.add_argument('--budget', type=int, required=True)

    def compute(self, **options):
        m = self.load(MeasureSerializer, options['measure'], '--measure')
        return CommandResult.from_outcome(
            goodness_scan(m, options['depth'], options['budget']))

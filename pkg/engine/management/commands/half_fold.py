from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import MeasureSerializer
from engine.utilities import half_fold


class Command(CertifyingCommand):
    help = 'Builds a 2-to-1 measure-preserving fold of the Cantor space.'
    writes_result = True

    def add_command_arguments(self, parser):
        parser.add_argument('--measure', required=True, help='A measure (JSON or file).')
        parser.add_argument('--budget', type=int, default=None)

    def compute(self, **options):
        m = self.load(MeasureSerializer, options['measure'], '--measure')
        f = half_fold(m, options['budget'])
        return CommandResult(f.to_representation(), result=f.to_representation())

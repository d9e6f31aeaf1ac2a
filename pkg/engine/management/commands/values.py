from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import MeasureSerializer, \
    ClopenSetSerializer
from engine.utilities import clopen_values, \
    restricted_values


class Command(CertifyingCommand):
    help = 'Lists the measures of all unions of cylinders of the given length.'

    def add_command_arguments(self, parser):
        parser.add_argument('--measure', required=True, help='A measure (JSON or file).')
        parser.add_argument('--depth', type=int, required=True)
        parser.add_argument('--restrict', default=None,
            help='A clopen set; lists the values of its clopen subsets instead.')

    def compute(self, **options):
        m = self.load(MeasureSerializer, options['measure'], '--measure')
        if options['restrict'] is not None:
            a = self.load(ClopenSetSerializer, options['restrict'], '--restrict')
            sample = restricted_values(m, a, options['depth'])
        else:
            sample = clopen_values(m, options['depth'])
        return CommandResult(sample.to_representation())

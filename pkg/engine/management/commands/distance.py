from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import TransducerSerializer
from engine.utilities import sup_distance


class Command(CertifyingCommand):
    help = 'Computes the supremum distance between two transducer maps.'

    def add_command_arguments(self, parser):
        parser.add_argument('--f', required=True, help='The first transducer.')
        parser.add_argument('--g', required=True, help='The second transducer.')
        parser.add_argument('--depth', type=int, required=True,
            help='Output bits to compare before settling for an upper bound.')

    def compute(self, **options):
        f = self.load(TransducerSerializer, options['f'], '--f')
        g = self.load(TransducerSerializer, options['g'], '--g')
        return CommandResult(sup_distance(f, g, options['depth']).to_representation())

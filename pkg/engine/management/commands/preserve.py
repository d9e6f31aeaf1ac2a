from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import TransducerSerializer, \
    MeasureSerializer
from engine.utilities import check_preserves


class Command(CertifyingCommand):
    help = ('Checks mu(f^-1[w]) = nu([w]) for all words up to the given'
        ' length.  Exits with 1 on the first violation.')

    def add_command_arguments(self, parser):
        parser.add_argument('--map', required=True, help='A transducer (JSON or file).')
        parser.add_argument('--mu', required=True, help='The measure on the domain.')
        parser.add_argument('--nu', required=True, help='The measure on the range.')
        parser.add_argument('--depth', type=int, required=True)

    def compute(self, **options):
        f = self.load(TransducerSerializer, options['map'], '--map')
        mu = self.load(MeasureSerializer, options['mu'], '--mu')
        nu = self.load(MeasureSerializer, options['nu'], '--nu')
        return CommandResult.from_outcome(check_preserves(f, mu, nu, options['depth']))

from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import TransducerSerializer
from engine.utilities import surjectivity_decide


class Command(CertifyingCommand):
    help = 'Decides whether a transducer map is onto.  Exits with 1 if not.'

    def add_command_arguments(self, parser):
        parser.add_argument('--map', required=True, help='A transducer (JSON or file).')

    def compute(self, **options):
        f = self.load(TransducerSerializer, options['map'], '--map')
        return CommandResult.from_outcome(surjectivity_decide(f))

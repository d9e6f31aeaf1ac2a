from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import TransducerSerializer, \
    ClopenSetSerializer
from engine.utilities import preimage_clopen


class Command(CertifyingCommand):
    help = 'Prints the preimage of a clopen set under a transducer map.'

    def add_command_arguments(self, parser):
        parser.add_argument('--map', required=True, help='A transducer (JSON or file).')
        parser.add_argument('--set', required=True, help='A clopen set (JSON or file).')

    def compute(self, **options):
        f = self.load(TransducerSerializer, options['map'], '--map')
        a = self.load(ClopenSetSerializer, options['set'], '--set')
        return CommandResult(preimage_clopen(f, a).to_representation())

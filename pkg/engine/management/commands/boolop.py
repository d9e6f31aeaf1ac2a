from engine.data_structures import boolean_op, \
    BOOLEAN_OPERATIONS
from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import ClopenSetSerializer


class Command(CertifyingCommand):
    help = 'Applies a Boolean operation to clopen sets.'

    def add_command_arguments(self, parser):
        parser.add_argument('--op', required=True, choices=BOOLEAN_OPERATIONS)
        parser.add_argument('--a', required=True, help='A clopen set (JSON or file).')
        parser.add_argument('--b', default=None,
            help='The second clopen set; omitted for the complement.')

    def compute(self, **options):
        a = self.load(ClopenSetSerializer, options['a'], '--a')
        b = None
        if options['b'] is not None:
            b = self.load(ClopenSetSerializer, options['b'], '--b')
        return CommandResult(boolean_op(options['op'], a, b).to_representation())

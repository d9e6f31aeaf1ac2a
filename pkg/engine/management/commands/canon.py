from engine.data_structures import canonicalize
from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import WordListSerializer


class Command(CertifyingCommand):
    help = 'Prints the canonical antichain of the union of the given cylinders.'

    def add_command_arguments(self, parser):
        parser.add_argument('--words', required=True,
            help='A JSON list of binary words, or a file holding one.')

    def compute(self, **options):
        words = self.load(WordListSerializer, options['words'], '--words')
        return CommandResult(canonicalize(words).to_representation())

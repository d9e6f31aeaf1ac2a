from django.conf import settings

from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import TransducerSerializer
from engine.utilities import injectivity_certificate
from engine.utilities.certificate_utils import injectivity_certificate_document


class Command(CertifyingCommand):
    help = ('Looks for two inputs with the same image.  Exits with 1 when'
        ' they are found and with 3 when the search is inconclusive.')
    emits_certificate = True

    def add_command_arguments(self, parser):
        parser.add_argument('--map', required=True, help='A transducer (JSON or file).')
        parser.add_argument('--buffer-bound', type=int, default=None,
            help='Largest unmatched output kept while comparing two runs.')

    def compute(self, **options):
        f = self.load(TransducerSerializer, options['map'], '--map')
        bound = options['buffer_bound']
        if bound is None:
            bound = settings.INJECTIVITY_BUFFER_BOUND
        outcome = injectivity_certificate(f, bound)
        return CommandResult.from_outcome(outcome,
            certificate=injectivity_certificate_document(f, bound, outcome))

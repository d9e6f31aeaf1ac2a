from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import TransducerSerializer
from engine.utilities import approx_homeo
from engine.utilities.certificate_utils import homeo_certificate


class Command(CertifyingCommand):
    help = ('Approximates a surjective transducer map by a homeomorphism'
        ' within distance 2^-depth.')
    emits_certificate = True
    writes_result = True

    def add_command_arguments(self, parser):
        parser.add_argument('--map', required=True, help='A transducer (JSON or file).')
        parser.add_argument('--depth', type=int, required=True)

    def compute(self, **options):
        f = self.load(TransducerSerializer, options['map'], '--map')
        g = approx_homeo(f, options['depth'])
        return CommandResult(g.to_representation(),
            certificate=homeo_certificate(f, options['depth'], g),
            result=g.to_representation())

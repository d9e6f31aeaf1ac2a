from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import TransducerSerializer, \
    MeasureSerializer
from engine.utilities import approx_measure_homeo
from engine.utilities.certificate_utils import homeo_certificate


class Command(CertifyingCommand):
    help = ('Approximates a measure-preserving transducer map by a'
        ' measure-preserving homeomorphism within distance 2^-depth.')
    emits_certificate = True
    writes_result = True

    def add_command_arguments(self, parser):
        parser.add_argument('--map', required=True, help='A transducer (JSON or file).')
        parser.add_argument('--mu', required=True, help='The measure on the domain.')
        parser.add_argument('--nu', required=True, help='The measure on the range.')
        parser.add_argument('--depth', type=int, required=True)
        parser.add_argument('--budget', type=int, default=None)

    def compute(self, **options):
        f = self.load(TransducerSerializer, options['map'], '--map')
        mu = self.load(MeasureSerializer, options['mu'], '--mu')
        nu = self.load(MeasureSerializer, options['nu'], '--nu')
        g = approx_measure_homeo(f, mu, nu, options['depth'], options['budget'])
        return CommandResult(g.to_representation(),
            certificate=homeo_certificate(f, options['depth'], g, mu, nu),
            result=g.to_representation())

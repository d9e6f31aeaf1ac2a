import logging

from engine.exceptions import OutOfRangeException
from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import TransducerSerializer, \
    MeasureSerializer
from engine.utilities import approx_homeo, \
    approx_measure_homeo
from engine.utilities.certificate_utils import homeo_certificate, \
    demo_certificate

logger = logging.getLogger(__name__)

TOPOLOGICAL = 'topological'
MEASURE = 'measure'


class Command(CertifyingCommand):
    help = ('Approximates a surjective (and in measure mode measure-preserving)'
        ' map by homeomorphisms g_1, ..., g_n with d(f, g_k) <= 2^-k and'
        ' prints one row per approximation.')
    emits_certificate = True

    def add_command_arguments(self, parser):
        parser.add_argument('--map', required=True, help='A transducer (JSON or file).')
        parser.add_argument('--mode', choices=[TOPOLOGICAL, MEASURE], default=TOPOLOGICAL)
        parser.add_argument('--n-max', type=int, required=True,
            help='The deepest approximation to build.')
        parser.add_argument('--mu', default=None,
            help='The measure on the domain (measure mode only).')
        parser.add_argument('--nu', default=None,
            help='The measure on the range; defaults to --mu.')
        parser.add_argument('--budget', type=int, default=None)

    def compute(self, **options):
        f = self.load(TransducerSerializer, options['map'], '--map')
        n_max = options['n_max']
        if n_max < 1:
            raise OutOfRangeException('--n-max must be at least 1.')

        mu = nu = None
        if options['mode'] == MEASURE:
            if options['mu'] is None:
                raise OutOfRangeException('The measure mode requires --mu.')
            mu = self.load(MeasureSerializer, options['mu'], '--mu')
            nu = mu if options['nu'] is None else \
                self.load(MeasureSerializer, options['nu'], '--nu')

        rows = []
        table = []
        for n in range(1, n_max + 1):
            if mu is None:
                g = approx_homeo(f, n)
            else:
                g = approx_measure_homeo(f, mu, nu, n, options['budget'])
            row = homeo_certificate(f, n, g, mu, nu)
            rows.append(row)
            table.append({
                'depth': n,
                'rules': len(g.rules),
                'distance': row['distance'],
                'bound': row['bound'],
                'bijective': row['bijective'],
                'measure_preserving': row.get('measure_preserving')
            })
            logger.info('Depth {n}: {k} rules, distance {d}.'.format(
                n=n, k=len(g.rules), d=row['distance']))
        payload = {
            'mode': options['mode'],
            'rows': table
        }
        return CommandResult(payload,
            certificate=demo_certificate(f, options['mode'], rows, mu, nu))

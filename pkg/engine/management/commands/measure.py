from engine.data_structures.rationals import format_rational, \
    parse_rational
from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import MeasureSerializer, \
    ClopenSetSerializer
from engine.utilities import clopen_measure, \
    boolean_distance, \
    delta_for_epsilon


class Command(CertifyingCommand):
    help = ('Measures a clopen set.  Optionally also its distance to a second'
        ' set and the diameter delta below which sets have measure < epsilon.')

    def add_command_arguments(self, parser):
        parser.add_argument('--measure', required=True, help='A measure (JSON or file).')
        parser.add_argument('--set', required=True, help='A clopen set (JSON or file).')
        parser.add_argument('--other', default=None,
            help='A second clopen set; prints m(A + B).')
        parser.add_argument('--epsilon', default=None,
            help='A rational such as "1/2"; prints delta(epsilon).')

    def compute(self, **options):
        m = self.load(MeasureSerializer, options['measure'], '--measure')
        a = self.load(ClopenSetSerializer, options['set'], '--set')
        payload = {'measure': format_rational(clopen_measure(m, a))}
        if options['other'] is not None:
            b = self.load(ClopenSetSerializer, options['other'], '--other')
            payload['distance'] = format_rational(boolean_distance(m, a, b))
        if options['epsilon'] is not None:
            eps = parse_rational(options['epsilon'])
            payload['delta'] = format_rational(delta_for_epsilon(m, eps))
        return CommandResult(payload)

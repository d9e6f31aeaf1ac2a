from engine.data_structures.rationals import format_rational
from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import TransducerSerializer, \
    MeasureSerializer, \
    ClopenSetSerializer, \
    ClopenSequenceSerializer
from engine.utilities import approx_algebra_iso, \
    evaluate_matched_tower
from engine.utilities.algebra_utils import default_dense_sequence


class Command(CertifyingCommand):
    help = ('Builds a matched tower approximating the measure algebra map'
        ' induced by a measure-preserving transducer.')
    writes_result = True

    def add_command_arguments(self, parser):
        parser.add_argument('--map', required=True, help='A transducer (JSON or file).')
        parser.add_argument('--mu', required=True, help='The measure on the domain.')
        parser.add_argument('--nu', required=True, help='The measure on the range.')
        parser.add_argument('--agree', type=int, required=True,
            help='The number n of sets E_1..E_n on which the tower is exact.')
        parser.add_argument('--depth', type=int, required=True,
            help='The number of refinement levels below the base level.')
        parser.add_argument('--sequence', default=None,
            help='A JSON list of clopen sets; defaults to the cylinders [0], [1], [00], ...')
        parser.add_argument('--budget', type=int, default=None)
        parser.add_argument('--evaluate', default=None,
            help='A clopen set to push through the tower at the deepest level.')

    def compute(self, **options):
        f = self.load(TransducerSerializer, options['map'], '--map')
        mu = self.load(MeasureSerializer, options['mu'], '--mu')
        nu = self.load(MeasureSerializer, options['nu'], '--nu')
        if options['sequence'] is not None:
            sequence = self.load(ClopenSequenceSerializer, options['sequence'], '--sequence')
        else:
            sequence = default_dense_sequence(options['agree'])
        tower = approx_algebra_iso(f, mu, nu, sequence, options['agree'],
            options['depth'], options['budget'])
        representation = tower.to_representation()
        payload = {'tower': representation}
        if options['evaluate'] is not None:
            b = self.load(ClopenSetSerializer, options['evaluate'], '--evaluate')
            image, error = evaluate_matched_tower(tower, b, tower.depth)
            payload['evaluation'] = {
                'image': image.to_representation(),
                'error_bound': format_rational(error),
                'level': tower.depth
            }
        return CommandResult(payload, result=representation)

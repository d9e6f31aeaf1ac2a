from engine.management.base import CertifyingCommand, \
    CommandResult
from engine.serializers import MeasureSerializer, \
    ClopenSetSerializer, \
    ClopenSequenceSerializer
from engine.utilities import caratheodory_tower, \
    interval_realize


class Command(CertifyingCommand):
    help = 'Realizes the clopen algebra of a measure by intervals of [0, 1].'
    writes_result = True

    def add_command_arguments(self, parser):
        parser.add_argument('--measure', required=True, help='A normalized measure.')
        parser.add_argument('--depth', type=int, required=True)
        parser.add_argument('--sequence', default=None,
            help='A JSON list of clopen sets E_1, E_2, ...; defaults to the'
                ' cylinders [0], [1], [00], ...')
        parser.add_argument('--realize', default=None,
            help='A clopen set whose interval realization is also printed.')

    def compute(self, **options):
        m = self.load(MeasureSerializer, options['measure'], '--measure')
        sequence = None
        if options['sequence'] is not None:
            sequence = self.load(ClopenSequenceSerializer, options['sequence'], '--sequence')
        tower = caratheodory_tower(m, options['depth'], sequence)
        representation = tower.to_representation()
        payload = {'tower': representation}
        if options['realize'] is not None:
            a = self.load(ClopenSetSerializer, options['realize'], '--realize')
            payload['realization'] = interval_realize(tower, a).to_representation()
        return CommandResult(payload, result=representation)

from engine.management.base import CertifyingCommand, \
    CommandResult, \
    NEGATIVE, \
    SUCCESS
from engine.utilities.io_utils import load_json_argument
from engine.utilities.certificate_utils import verify_certificate


class Command(CertifyingCommand):
    help = ('Re-checks a certificate written by approx_homeo, measure_homeo,'
        ' injective or demo_generic.  Exits with 1 on any discrepancy.')

    def add_command_arguments(self, parser):
        parser.add_argument('--certificate', required=True,
            help='The certificate file (or inline JSON).')

    def compute(self, **options):
        cert = load_json_argument(options['certificate'], '--certificate')
        problems = verify_certificate(cert)
        payload = {
            'kind': cert.get('kind') if type(cert) == dict else None,
            'verified': not problems,
            'discrepancies': problems
        }
        return CommandResult(payload, NEGATIVE if problems else SUCCESS)

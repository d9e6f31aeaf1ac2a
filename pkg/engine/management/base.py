import logging

from django.core.management.base import BaseCommand, \
    CommandError
from rest_framework.exceptions import ValidationError

from engine.exceptions import NotSurjectiveException, \
    PreservationViolatedException, \
    UnresolvableSetException, \
    BudgetExhaustedException, \
    ResourceLimitException
from engine.data_structures.outcomes import NotSurjective
from engine.utilities.io_utils import load_json_argument, \
    render_json, \
    write_json_file

logger = logging.getLogger(__name__)

# exit codes
SUCCESS = 0
NEGATIVE = 1
USAGE_ERROR = 2
EXHAUSTED = 3


class KitCommandError(CommandError):
    '''
    A `CommandError` carrying one of the exit codes above.
    '''

    def __init__(self, message, returncode):
        super().__init__(message, returncode=returncode)


def flatten_errors(detail):
    '''
    Turns the (possibly nested) detail of a DRF ValidationError
    into a single readable string.
    '''
    if isinstance(detail, dict):
        return '; '.join('{k}: {v}'.format(k=k, v=flatten_errors(v))
            for k, v in detail.items())
    if isinstance(detail, (list, tuple)):
        return '; '.join(flatten_errors(d) for d in detail)
    return str(detail)


class CommandResult(object):
    '''
    What a command produced: the JSON payload for standard output, the
    exit status and optionally a certificate and a result to write out.
    '''

    def __init__(self, payload, status=SUCCESS, certificate=None, result=None):
        self.payload = payload
        self.status = status
        self.certificate = certificate
        self.result = result

    @classmethod
    def from_outcome(cls, outcome, certificate=None):
        if outcome.is_negative:
            status = NEGATIVE
        elif outcome.is_exhausted:
            status = EXHAUSTED
        else:
            status = SUCCESS
        return cls(outcome.to_representation(), status, certificate=certificate)


class CertifyingCommand(BaseCommand):
    '''
    Base class for the commands of this app.  Subclasses declare their
    arguments in `add_command_arguments` and do their work in `compute`,
    which returns a `CommandResult`.  This class prints the payload as
    JSON, writes the optional result and certificate files, and maps
    failures to exit codes:

    0: success
    1: a verified negative answer (e.g. the map is not surjective)
    2: a usage error or malformed input
    3: a search budget or resource limit was exhausted
    '''
    # set to True for commands accepting --certificate
    emits_certificate = False

    # set to True for commands accepting --out
    writes_result = False

    def add_arguments(self, parser):
        parser.add_argument(
            '--seed',
            type=int,
            default=None,
            help='Recorded in the output; accepted for reproducible test-corpus runs.'
        )
        if self.emits_certificate:
            parser.add_argument(
                '--certificate',
                default=None,
                help='A path where a JSON certificate of the result is written.'
            )
        if self.writes_result:
            parser.add_argument(
                '--out',
                default=None,
                help='A path where the constructed object is written as JSON.'
            )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def compute(self, **options):
        raise NotImplementedError('You must override this method.')

    def load(self, serializer_class, value, name):
        '''
        Reads a JSON argument (file path or inline text) through a
        serializer and returns the instance.
        '''
        data = load_json_argument(value, name)
        return serializer_class(data=data).get_instance()

    def handle(self, *args, **options):
        try:
            result = self.compute(**options)
        except ValidationError as ex:
            logger.error('Rejected input: {ex}'.format(ex=flatten_errors(ex.detail)))
            raise KitCommandError(flatten_errors(ex.detail), USAGE_ERROR)
        except NotSurjectiveException as ex:
            result = CommandResult.from_outcome(NotSurjective(ex.witness))
        except PreservationViolatedException as ex:
            result = CommandResult.from_outcome(ex.outcome)
        except (BudgetExhaustedException, ResourceLimitException,
                UnresolvableSetException) as ex:
            logger.warning(str(ex))
            raise KitCommandError(str(ex), EXHAUSTED)

        payload = result.payload
        if options.get('seed') is not None and isinstance(payload, dict):
            payload = dict(payload, seed=options['seed'])
        self.stdout.write(render_json(payload))

        if result.result is not None and options.get('out'):
            write_json_file(options['out'], result.result)
        if result.certificate is not None and options.get('certificate'):
            write_json_file(options['certificate'], result.certificate)

        if result.status != SUCCESS:
            raise KitCommandError('The command finished with a {kind}'
                ' result.'.format(kind='negative' if result.status == NEGATIVE
                    else 'budget-limited'), result.status)

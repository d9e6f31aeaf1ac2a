import os
import json
import logging

from engine.exceptions import MalformedInputException

logger = logging.getLogger(__name__)


def load_json_argument(value, name):
    '''
    Command arguments are either the path of a JSON file or
    the JSON text itself.  Returns the parsed JSON.
    '''
    if os.path.isfile(value):
        logger.debug('Reading {name} from the file {path}'.format(
            name=name, path=value))
        try:
            with open(value) as fin:
                return json.load(fin)
        except json.JSONDecodeError as ex:
            raise MalformedInputException('The file {path} given for {name}'
                ' is not valid JSON: {ex}'.format(path=value, name=name, ex=ex))
    try:
        return json.loads(value)
    except json.JSONDecodeError:
        raise MalformedInputException('The argument {name} is neither an'
            ' existing file nor valid JSON: {v}'.format(name=name, v=value))


def render_json(payload):
    '''
    Fixed key order and indentation, so equal payloads give
    byte-identical text.
    '''
    return json.dumps(payload, sort_keys=True, indent=2)


def write_json_file(path, payload):
    with open(path, 'w') as fout:
        fout.write(render_json(payload))
        fout.write('\n')
    logger.info('Wrote {path}'.format(path=path))

'''
Runs the commands of the engine app from an argument list, for example
```
run_command(['preimage', '--map', 'fold.json', '--set', '{"antichain": ["0"]}'])
```
and returns the exit code.  Command names may use hyphens or underscores.
'''
import os
import sys
import logging

import django
from django.apps import apps
from django.core.management import call_command, \
    get_commands
from django.core.management.base import CommandError

logger = logging.getLogger(__name__)

USAGE_ERROR = 2


def _setup():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'cantorkit.settings')
    if not apps.ready:
        django.setup()


def engine_commands():
    '''
    The names of the commands provided by the engine app.
    '''
    _setup()
    return sorted(name for name, app in get_commands().items() if app == 'engine')


def run_command(argv, stdout=None, stderr=None):
    _setup()
    from engine.management.base import KitCommandError

    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if not argv:
        stderr.write('Available commands: {c}\n'.format(c=', '.join(engine_commands())))
        return USAGE_ERROR

    name = argv[0].replace('-', '_')
    if name not in engine_commands():
        stderr.write('Unknown command: {name}\n'.format(name=argv[0]))
        return USAGE_ERROR
    try:
        call_command(name, *argv[1:], stdout=stdout, stderr=stderr)
    except KitCommandError as ex:
        stderr.write('{ex}\n'.format(ex=ex))
        return ex.returncode
    except CommandError as ex:
        # argument parsing problems
        stderr.write('{ex}\n'.format(ex=ex))
        return USAGE_ERROR
    return 0


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == '__main__':
    main()

import os

from django.core.exceptions import ImproperlyConfigured

from . import base_logging_config as log_config


# a small helper for reading integer-valued environment variables
# which override the defaults below:
def get_int_env(variable_name, default):
    try:
        value = int(os.environ.get(variable_name, default))
    except ValueError:
        raise ImproperlyConfigured('The {var} environment variable'
            ' must be an integer.'.format(var=variable_name)
        )
    if value < 1:
        raise ImproperlyConfigured('The {var} environment variable'
            ' must be a positive integer.'.format(var=variable_name)
        )
    return value

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# Nothing here is served over the web, so a local key is acceptable
# when none is provided.
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'cantorkit-local-only-key')

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'engine.apps.EngineConfig',
]

# All computations are in-memory; there is no database.
DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

LOGGING_CONFIG = log_config.LOGGING_CONFIG

###############################################################################
# Parameters for the computation engine
###############################################################################

# How far the pending-output discrepancy may grow in the product
# construction behind the injectivity certificate before we give up
# and report an Unknown outcome:
INJECTIVITY_BUFFER_BOUND = get_int_env('INJECTIVITY_BUFFER_BOUND', 64)

# Default depth budget for clopen subset searches is the deepest word
# of the inputs plus this slack:
BUDGET_SLACK = get_int_env('BUDGET_SLACK', 16)

# Clopen values are enumerated over 2^depth cylinders.  Anything deeper
# than this is refused:
MAX_VALUES_DEPTH = get_int_env('MAX_VALUES_DEPTH', 14)

# ...and the number of distinct subset sums retained is capped:
MAX_VALUE_COUNT = get_int_env('MAX_VALUE_COUNT', 500000)

# The number of search nodes a single clopen subset search may expand.
# Exhausting it yields a NotFoundUpToDepth outcome, never a refutation.
SUBSET_SEARCH_NODE_LIMIT = get_int_env('SUBSET_SEARCH_NODE_LIMIT', 200000)

###############################################################################
# END Parameters for the computation engine
###############################################################################

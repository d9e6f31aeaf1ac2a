import copy
import logging.config

from .base_settings import *

# setup the logging options:
kit_config_dict = copy.deepcopy(log_config.base_logging_config_dict)

# make changes to the default logging dict below:

#######

# finally, register this config:
logging.config.dictConfig(kit_config_dict)

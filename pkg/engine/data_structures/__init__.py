from .clopen import ClopenSet, \
    ClopenPartition, \
    canonicalize, \
    boolean_op, \
    common_refinement, \
    diameter, \
    mesh, \
    BOOLEAN_OPERATIONS
from .transducer import TransducerMap
from .prefix_exchange import PrefixExchange
from .measures import CylinderMeasure, \
    BernoulliMeasure, \
    MarkovMeasure, \
    TableMeasure, \
    MEASURE_MAPPING, \
    create_measure
from .intervals import IntervalSet
from .towers import RealizationTower, \
    MatchedTower, \
    MatchedCell
from .value_sample import ValueSample

from .fields import RationalField, \
    WordField
from .clopen import ClopenSetSerializer, \
    ClopenPartitionSerializer, \
    ClopenSequenceSerializer, \
    WordListSerializer
from .transducer import TransducerSerializer, \
    PrefixExchangeSerializer
from .measure import MeasureSerializer
from .values import ValueSetSerializer

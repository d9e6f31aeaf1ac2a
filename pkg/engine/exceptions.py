from rest_framework.exceptions import ValidationError


###############################################################################
# Raised when inputs (words, sets, machines, measures) do not satisfy
# the constraints of the corresponding data structure.
###############################################################################

class InvalidWordException(ValidationError):
    '''
    Raised if a binary word contains anything other than
    the characters "0" and "1".
    '''
    pass


class InvalidClopenException(ValidationError):
    '''
    Raised if a list of words cannot be read as a clopen set or
    partition (e.g. overlapping cells).
    '''
    pass


class AmbientMismatchException(ValidationError):
    '''
    Raised when two partitions (or an exchange and its cells)
    are stated over different ambient clopen sets.
    '''
    pass


class EmptyClopenException(ValidationError):
    '''
    Raised when an operation requires a nonempty clopen set.
    '''
    pass


class InvalidTransducerException(ValidationError):
    '''
    Raised for transducers with missing or duplicate transitions,
    unknown states, or bits other than 0/1.
    '''
    pass


class StarvingTransducerException(InvalidTransducerException):
    '''
    Raised when a reachable cycle of the transducer emits nothing,
    so that some infinite input has a finite output.
    '''
    pass


class InvalidExchangeException(ValidationError):
    '''
    Raised when the rules of a prefix exchange do not form
    a bijective matching of cylinder partitions.
    '''
    pass


class InvalidMeasureException(ValidationError):
    '''
    Raised when cylinder weights are not strictly positive,
    not additive, or not stochastic.
    '''
    pass


class NonNormalizedMeasureException(InvalidMeasureException):
    '''
    Raised when an operation requires a measure of total mass 1.
    '''
    pass


class OutOfRangeException(ValidationError):
    '''
    Raised when a numeric argument lies outside its permitted range.
    '''
    pass


class MalformedValueSetException(ValidationError):
    '''
    Raised when a set of values lacks the endpoints 0 and total.
    '''
    pass


class TotalMismatchException(ValidationError):
    '''
    Raised when two clopen sets that should carry equal mass do not.
    '''
    pass


class MalformedInputException(ValidationError):
    '''
    Raised when a command argument is neither the path of a JSON
    file nor valid JSON text.
    '''
    pass


###############################################################################
# Raised when a computation cannot produce its result.  These carry
# the evidence that explains why.
###############################################################################

class NotSurjectiveException(Exception):
    '''
    Raised when a construction requires a surjective map.  The
    `witness` is a word w whose cylinder misses the image.
    '''
    def __init__(self, witness):
        self.witness = witness
        super().__init__('The map is not surjective: its image misses'
            ' the cylinder [{w}].'.format(w=witness))


class PreservationViolatedException(Exception):
    '''
    Raised when a construction requires a measure-preserving map.
    `outcome` is the `Violated` outcome that was found.
    '''
    def __init__(self, outcome):
        self.outcome = outcome
        super().__init__('The map does not preserve measure: {outcome}'.format(
            outcome=outcome))


class UnresolvableSetException(Exception):
    '''
    Raised when a clopen set is not a union of cells at any level
    of a tower.  The caller must build a deeper tower.
    '''
    def __init__(self, clopen):
        self.clopen = clopen
        super().__init__('The set {clopen} is not a union of cells at any'
            ' level of the tower.'.format(clopen=clopen))


class BudgetExhaustedException(Exception):
    '''
    Raised when a bounded search gives up.  This is never a proof
    that no solution exists.
    '''
    pass


class ResourceLimitException(Exception):
    '''
    Raised when a request exceeds a configured resource limit.
    '''
    pass

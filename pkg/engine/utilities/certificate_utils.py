'''
Certificates are JSON documents holding every input of a construction
together with its result and the facts claimed about it.  `verify_certificate`
re-checks those facts from the document alone.
'''
import logging
from fractions import Fraction
from math import gcd

from rest_framework.exceptions import ValidationError

from engine.data_structures import ClopenSet
from engine.data_structures.rationals import format_rational
from engine.data_structures.words import all_words, \
    is_prefix, \
    common_prefix_length
from engine.serializers import TransducerSerializer, \
    PrefixExchangeSerializer, \
    MeasureSerializer, \
    ClopenSetSerializer
from .map_utils import from_prefix_exchange, \
    preimage_clopen, \
    sup_distance, \
    injectivity_certificate
from .measure_utils import check_preserves
from .homeo_utils import homeo_cells

logger = logging.getLogger(__name__)

# extra output depth used when measuring d(f, g)
DISTANCE_SLACK = 4

APPROX_HOMEO = 'approx_homeo'
MEASURE_HOMEO = 'measure_homeo'
INJECTIVITY = 'injectivity'
DEMO_GENERIC = 'demo_generic'


###############################################################################
# Building certificates
###############################################################################

def homeo_certificate(f, n, g, mu=None, nu=None):
    '''
    Describes the approximation g of f at depth n: the preimage of each
    cylinder [w], the exchange, and the distance d(f, g).  With measures
    given every rule also lists the measures of its two cylinders.
    '''
    distance = sup_distance(f, from_prefix_exchange(g), n + DISTANCE_SLACK)
    certificate = {
        'kind': APPROX_HOMEO if mu is None else MEASURE_HOMEO,
        'map': f.to_representation(),
        'depth': n,
        'exchange': g.to_representation(),
        'cells': [
            {'target': w, 'preimage': cell.to_representation()}
            for w, cell in homeo_cells(f, n)
        ],
        'distance': distance.to_representation(),
        'bound': format_rational(Fraction(1, 2 ** n)),
        'bijective': True
    }
    if mu is not None:
        certificate['mu'] = mu.to_representation()
        certificate['nu'] = nu.to_representation()
        certificate['rules'] = [
            {
                'in': u,
                'out': v,
                'mu': format_rational(mu.weight(u)),
                'nu': format_rational(nu.weight(v))
            } for u, v in g.rules
        ]
        certificate['measure_preserving'] = True
    return certificate


def injectivity_certificate_document(f, buffer_bound, outcome):
    return {
        'kind': INJECTIVITY,
        'map': f.to_representation(),
        'buffer_bound': buffer_bound,
        'outcome': outcome.to_representation()
    }


def demo_certificate(f, mode, rows, mu=None, nu=None):
    certificate = {
        'kind': DEMO_GENERIC,
        'map': f.to_representation(),
        'mode': mode,
        'rows': rows
    }
    if mu is not None:
        certificate['mu'] = mu.to_representation()
        certificate['nu'] = nu.to_representation()
    return certificate


###############################################################################
# Verification
###############################################################################

def _verify_homeo(cert):
    problems = []
    f = TransducerSerializer(data=cert['map']).get_instance()
    n = cert['depth']
    try:
        g = PrefixExchangeSerializer(data=cert['exchange']).get_instance()
    except ValidationError as ex:
        return ['The exchange is not a bijective matching: {ex}'.format(ex=ex)]
    if not g.is_self_homeomorphism():
        problems.append('The exchange is not a map of the whole space onto itself.')
        return problems

    targets = sorted(c['target'] for c in cert['cells'])
    if targets != all_words(n):
        problems.append('The cells do not list every word of length {n}.'.format(n=n))

    for c in cert['cells']:
        w = c['target']
        claimed = ClopenSetSerializer(data=c['preimage']).get_instance()
        actual = preimage_clopen(f, ClopenSet.cylinder(w))
        if claimed != actual:
            problems.append('The preimage of [{w}] is {a}, not {c}.'.format(
                w=w, a=actual, c=claimed))
        for u, v in g.rules:
            if actual.contains_cylinder(u) and not is_prefix(w, v):
                problems.append('The rule {u} -> {v} leaves the cell of'
                    ' [{w}].'.format(u=u, v=v, w=w))

    distance = sup_distance(f, from_prefix_exchange(g), n + DISTANCE_SLACK)
    if distance.to_representation() != cert['distance']:
        problems.append('The distance is {d}, not {c}.'.format(
            d=distance.to_representation(), c=cert['distance']))
    bound = Fraction(1, 2 ** n)
    if distance.value > bound:
        problems.append('The distance {d} exceeds 2^-{n}.'.format(
            d=distance.value, n=n))
    if cert['bound'] != format_rational(bound):
        problems.append('The bound is {b}, not {c}.'.format(
            b=format_rational(bound), c=cert['bound']))
    if cert['bijective'] is not True:
        problems.append('The exchange is bijective, but the certificate'
            ' claims {c}.'.format(c=cert['bijective']))

    if cert['kind'] == MEASURE_HOMEO:
        problems.extend(_verify_measure_rules(cert, g))
    return problems


def _verify_measure_rules(cert, g):
    problems = []
    mu = MeasureSerializer(data=cert['mu']).get_instance()
    nu = MeasureSerializer(data=cert['nu']).get_instance()
    listed = sorted((r['in'], r['out']) for r in cert['rules'])
    if listed != list(g.rules):
        problems.append('The listed rules differ from the exchange.')
    for r in cert['rules']:
        u, v = r['in'], r['out']
        if format_rational(mu.weight(u)) != r['mu'] or \
                format_rational(nu.weight(v)) != r['nu']:
            problems.append('The measures listed for {u} -> {v} are'
                ' wrong.'.format(u=u, v=v))
        if mu.weight(u) != nu.weight(v):
            problems.append('The rule {u} -> {v} changes the measure.'.format(u=u, v=v))
        elif mu.conditional_signature(u) != nu.conditional_signature(v):
            problems.append('The rule {u} -> {v} changes the conditional'
                ' measure.'.format(u=u, v=v))
    outcome = check_preserves(from_prefix_exchange(g), mu, nu, g.rule_depth)
    if outcome.is_negative:
        problems.append('The exchange does not preserve measure: {o}'.format(o=outcome))
    if cert['measure_preserving'] != (not outcome.is_negative):
        problems.append('The certificate claims measure_preserving {c}.'.format(
            c=cert['measure_preserving']))
    return problems


def _periodic_prefix(prefix, cycle, length):
    word = prefix
    while len(word) < length:
        word += cycle
    return word[:length]


def _verify_not_injective(f, outcome):
    '''
    Checks that the two eventually periodic inputs differ, and that after
    their prefixes one pass through both cycles brings the pair back to
    the same states with the same unmatched output.  Their images then
    agree forever.
    '''
    x_prefix, x_cycle = outcome['x_prefix'], outcome['x_cycle']
    y_prefix, y_cycle = outcome['y_prefix'], outcome['y_cycle']
    if not x_cycle or not y_cycle:
        return ['The repeating parts of the witness must be nonempty.']
    if len(x_cycle) != len(y_cycle):
        return ['The repeating parts of the witness must have equal length.']

    problems = []
    period = len(x_cycle) * len(y_cycle) // gcd(len(x_cycle), len(y_cycle))
    horizon = max(len(x_prefix), len(y_prefix)) + period
    if _periodic_prefix(x_prefix, x_cycle, horizon) == \
            _periodic_prefix(y_prefix, y_cycle, horizon):
        problems.append('The two witness inputs are equal.')

    if f.evaluate_periodic(x_prefix, x_cycle, horizon) != \
            f.evaluate_periodic(y_prefix, y_cycle, horizon):
        return problems + ['The images of the witness inputs differ within'
            ' their first {h} bits.'.format(h=horizon)]

    def settle(left, right):
        n = min(len(left), len(right))
        if common_prefix_length(left[:n], right[:n]) < n:
            return None
        return left[n:], right[n:]

    out_x, qx = f.run(x_prefix)
    out_y, qy = f.run(y_prefix)
    start = settle(out_x, out_y)
    if start is None:
        return problems + ['The images of the witness prefixes already differ.']
    cycle_x, qx_after = f.run(x_cycle, qx)
    cycle_y, qy_after = f.run(y_cycle, qy)
    after = settle(start[0] + cycle_x, start[1] + cycle_y)
    if after is None or after != start or (qx_after, qy_after) != (qx, qy):
        problems.append('The witness cycles do not return to the same'
            ' configuration with agreeing outputs.')
    return problems


def _verify_injectivity(cert):
    f = TransducerSerializer(data=cert['map']).get_instance()
    claimed = cert['outcome']
    if claimed['outcome'] == 'NotInjective':
        return _verify_not_injective(f, claimed)
    actual = injectivity_certificate(f, cert['buffer_bound'])
    if actual.to_representation() != claimed:
        return ['Recomputing gives {a}, not {c}.'.format(
            a=actual.to_representation(), c=claimed)]
    return []


def _verify_demo(cert):
    problems = []
    depths = [row['depth'] for row in cert['rows']]
    if depths != list(range(1, len(depths) + 1)):
        problems.append('The rows must cover the depths 1, 2, ... in order.')
    expected_kind = MEASURE_HOMEO if cert['mode'] == 'measure' else APPROX_HOMEO
    for row in cert['rows']:
        if row['kind'] != expected_kind or row['map'] != cert['map']:
            problems.append('The row for depth {n} does not belong to this'
                ' demonstration.'.format(n=row['depth']))
            continue
        problems.extend('depth {n}: {p}'.format(n=row['depth'], p=p)
            for p in _verify_homeo(row))
    return problems


VERIFIERS = {
    APPROX_HOMEO: _verify_homeo,
    MEASURE_HOMEO: _verify_homeo,
    INJECTIVITY: _verify_injectivity,
    DEMO_GENERIC: _verify_demo,
}


def verify_certificate(cert):
    '''
    Returns the list of discrepancies found; an empty list means every
    claim of the certificate was re-established.
    '''
    if type(cert) != dict or cert.get('kind') not in VERIFIERS:
        return ['Unknown certificate kind; expected one of: {k}'.format(
            k=', '.join(sorted(VERIFIERS.keys())))]
    try:
        problems = VERIFIERS[cert['kind']](cert)
    except KeyError as ex:
        return ['The certificate is missing the entry {k}.'.format(k=ex)]
    logger.info('Checked a {kind} certificate: {n} discrepancies.'.format(
        kind=cert['kind'], n=len(problems)))
    return problems

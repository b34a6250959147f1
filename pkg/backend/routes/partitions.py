"""
Partition API routes
Lattice operations, enumeration and the Möbius function
"""
from flask import Blueprint, request, jsonify

from utils.errors import BoundTooLargeError, LatticeSymError, MalformedInputError
from utils.lattice import interval, mobius
from utils.logger import logger
from utils.partitions import (
    bell,
    concat,
    enumerate_partitions,
    join,
    meet,
    refines,
    restrict,
    shape,
    split,
)
from utils.serialization import (
    REQUEST_DEGREE_LIMIT,
    partition_from_json,
    require_degree_at_most,
    require_field,
)

bp = Blueprint('partitions', __name__)

ENUMERATE_LIMIT = REQUEST_DEGREE_LIMIT


def _partition_payload(a):
    return {'text': a.text(), 'blocks': a.to_json()}


def _domain_error(e: LatticeSymError):
    logger.info(f"⚠️ Rejected partition request: {e.message}", meta={'code': e.code})
    return jsonify({'ok': False, 'error': e.to_dict()}), 400


def _int_arg(name: str) -> int:
    value = request.args.get(name)
    if value is None:
        raise MalformedInputError(f'Missing query parameter {name!r}', {'field': name})
    try:
        return int(value)
    except ValueError:
        raise MalformedInputError(f'Query parameter {name!r} must be an integer', {'value': value})


@bp.route('/partitions/op', methods=['POST'])
def partition_op():
    """
    Apply a lattice operation
    Body: {op: meet|join|concat|refines|split|restrict|interval, a, b | k | subset}
    """
    try:
        data = request.get_json(force=True, silent=True) or {}
        op = require_field(data, 'op')
        a = partition_from_json(require_field(data, 'a'))

        if op in ('meet', 'join', 'concat', 'refines', 'interval'):
            b = partition_from_json(require_field(data, 'b'))
            if op == 'meet':
                result = _partition_payload(meet(a, b))
            elif op == 'join':
                result = _partition_payload(join(a, b))
            elif op == 'concat':
                result = _partition_payload(concat(a, b))
            elif op == 'refines':
                result = refines(a, b)
            else:
                require_degree_at_most('a', a.n)
                result = [_partition_payload(c) for c in interval(a, b)]
        elif op == 'split':
            k = require_field(data, 'k')
            if not isinstance(k, int):
                raise MalformedInputError('k must be an integer', {'k': k})
            pieces = split(a, k)
            result = None if pieces is None else [_partition_payload(p) for p in pieces]
        elif op == 'restrict':
            subset = require_field(data, 'subset')
            if not isinstance(subset, list):
                raise MalformedInputError('subset must be an array of block indices', {'subset': subset})
            result = _partition_payload(restrict(a, subset))
        else:
            raise MalformedInputError(f'Unknown op {op!r}', {'op': op})

        return jsonify({'ok': True, 'data': {'op': op, 'result': result}}), 200

    except LatticeSymError as e:
        return _domain_error(e)


@bp.route('/partitions/enumerate', methods=['GET'])
def partition_enumerate():
    """All partitions of [n] in canonical order. Query params: n"""
    try:
        n = _int_arg('n')
        if n > ENUMERATE_LIMIT:
            raise BoundTooLargeError(f'Enumeration is limited to n <= {ENUMERATE_LIMIT}',
                                     {'n': n, 'limit': ENUMERATE_LIMIT})
        partitions = [a.text() for a in enumerate_partitions(n)]
        return jsonify({
            'ok': True,
            'data': {'n': n, 'count': len(partitions), 'bell': bell(n), 'partitions': partitions}
        }), 200

    except LatticeSymError as e:
        return _domain_error(e)


@bp.route('/partitions/mobius', methods=['GET'])
def partition_mobius():
    """μ(B, A). Query params: b, a (text form)"""
    try:
        b = partition_from_json(request.args.get('b', ''))
        a = partition_from_json(request.args.get('a', ''))
        return jsonify({
            'ok': True,
            'data': {'lower': b.text(), 'upper': a.text(), 'mobius': mobius(b, a)}
        }), 200

    except LatticeSymError as e:
        return _domain_error(e)


@bp.route('/partitions/shape', methods=['GET'])
def partition_shape():
    """λ(A). Query params: a"""
    try:
        a = partition_from_json(request.args.get('a', ''))
        lam = shape(a)
        return jsonify({
            'ok': True,
            'data': {
                'partition': a.text(),
                'shape': list(lam.parts),
                'size': lam.size,
                'length': lam.length
            }
        }), 200

    except LatticeSymError as e:
        return _domain_error(e)

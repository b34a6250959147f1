"""
NCSym API routes
Basis changes, products, coproducts and counits
"""
from flask import Blueprint, request, jsonify

from models.element import BasisTag, NCSymElement
from services.ncsym import (
    convert,
    coproduct_external,
    coproduct_external_x,
    coproduct_internal,
    counit,
    counit_internal,
    multiply,
)
from utils.errors import LatticeSymError, MalformedInputError
from utils.logger import logger
from utils.serialization import (
    INTERNAL_COPRODUCT_DEGREE_LIMIT,
    degree_of,
    element_from_json,
    enum_field,
    require_degree_at_most,
    require_field,
    to_json,
)

bp = Blueprint('ncsym', __name__)


def _domain_error(e: LatticeSymError):
    logger.info(f"⚠️ Rejected ncsym request: {e.message}", meta={'code': e.code})
    return jsonify({'ok': False, 'error': e.to_dict()}), 400


def _element(data, key: str = 'element') -> NCSymElement:
    element = element_from_json(require_field(data, key))
    require_degree_at_most(key, degree_of(element))
    return element


@bp.route('/ncsym/convert', methods=['POST'])
def ncsym_convert():
    """
    Change of basis
    Body: {element: {basis, terms}, to: m|p|x}
    """
    try:
        data = request.get_json(force=True, silent=True) or {}
        element = _element(data)
        target = enum_field(BasisTag, require_field(data, 'to'), 'basis')
        return jsonify({'ok': True, 'data': to_json(convert(element, target))}), 200

    except LatticeSymError as e:
        return _domain_error(e)


@bp.route('/ncsym/multiply', methods=['POST'])
def ncsym_multiply():
    """
    Product of two elements in a common basis
    Body: {left, right}
    """
    try:
        data = request.get_json(force=True, silent=True) or {}
        left, right = _element(data, 'left'), _element(data, 'right')
        require_degree_at_most('product', degree_of(left) + degree_of(right))
        product = multiply(left, right)
        return jsonify({'ok': True, 'data': to_json(product)}), 200

    except LatticeSymError as e:
        return _domain_error(e)


@bp.route('/ncsym/coproduct', methods=['POST'])
def ncsym_coproduct():
    """
    External or internal coproduct
    Body: {element, kind: external|internal}
    An x-basis element's external coproduct goes through the m basis.
    """
    try:
        data = request.get_json(force=True, silent=True) or {}
        element = _element(data)
        kind = data.get('kind', 'external')

        if kind == 'internal':
            if element.basis != BasisTag.P:
                require_degree_at_most('element', degree_of(element),
                                       INTERNAL_COPRODUCT_DEGREE_LIMIT)
            result = coproduct_internal(element)
        elif kind == 'external':
            if element.basis == BasisTag.X:
                result = coproduct_external_x(element)
            else:
                result = coproduct_external(element)
        else:
            raise MalformedInputError(f'Unknown coproduct kind {kind!r}',
                                      {'kind': kind, 'allowed': ['external', 'internal']})

        return jsonify({'ok': True, 'data': to_json(result)}), 200

    except LatticeSymError as e:
        return _domain_error(e)


@bp.route('/ncsym/counit', methods=['POST'])
def ncsym_counit():
    """
    Both counits of an element
    Body: {element}
    """
    try:
        data = request.get_json(force=True, silent=True) or {}
        element = _element(data)
        return jsonify({
            'ok': True,
            'data': {'external': counit(element), 'internal': counit_internal(element)}
        }), 200

    except LatticeSymError as e:
        return _domain_error(e)

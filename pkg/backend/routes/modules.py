"""
Lattice algebra module API routes
Idempotents, induction, restriction, tensor products, characters and the Frobenius map
"""
from flask import Blueprint, request, jsonify

from models.module import ProductTag, SimpleModuleLabel
from services.latticealg import (
    character,
    frobenius,
    frobenius_tensor,
    idempotent,
    induct,
    restrict,
    tensor_simple,
)
from utils.errors import LatticeSymError, MalformedInputError
from utils.logger import logger
from utils.serialization import (
    enum_field,
    degree_of,
    module_sum_from_json,
    partition_from_json,
    require_degree_at_most,
    require_field,
    to_json,
)

bp = Blueprint('modules', __name__)


def _domain_error(e: LatticeSymError):
    logger.info(f"⚠️ Rejected module request: {e.message}", meta={'code': e.code})
    return jsonify({'ok': False, 'error': e.to_dict()}), 400


def _algebra(data) -> ProductTag:
    return enum_field(ProductTag, require_field(data, 'algebra'), 'algebra')


def _partition(data, key: str):
    a = partition_from_json(require_field(data, key))
    require_degree_at_most(key, a.n)
    return a


def _label(data, tag: ProductTag, key: str) -> SimpleModuleLabel:
    return SimpleModuleLabel(tag, _partition(data, key))


@bp.route('/modules/idempotent', methods=['POST'])
def module_idempotent():
    """
    Primitive idempotent attached to a partition
    Body: {algebra: meet|join|diag, a}
    """
    try:
        data = request.get_json(force=True, silent=True) or {}
        tag = _algebra(data)
        a = _partition(data, 'a')
        return jsonify({'ok': True, 'data': to_json(idempotent(tag, a))}), 200

    except LatticeSymError as e:
        return _domain_error(e)


@bp.route('/modules/induct', methods=['POST'])
def module_induct():
    """
    Induction product of two simple modules
    Body: {algebra, a, b}
    """
    try:
        data = request.get_json(force=True, silent=True) or {}
        tag = _algebra(data)
        a, b = _label(data, tag, 'a'), _label(data, tag, 'b')
        require_degree_at_most('product', a.partition.n + b.partition.n)
        result = induct(tag, a, b)
        return jsonify({'ok': True, 'data': to_json(result)}), 200

    except LatticeSymError as e:
        return _domain_error(e)


@bp.route('/modules/restrict', methods=['POST'])
def module_restrict():
    """
    Restriction of a simple module along the cut at k
    Body: {algebra, a, k}
    """
    try:
        data = request.get_json(force=True, silent=True) or {}
        tag = _algebra(data)
        k = require_field(data, 'k')
        if isinstance(k, bool) or not isinstance(k, int):
            raise MalformedInputError('k must be an integer', {'k': k})
        result = restrict(tag, k, _label(data, tag, 'a'))
        return jsonify({'ok': True, 'data': to_json(result)}), 200

    except LatticeSymError as e:
        return _domain_error(e)


@bp.route('/modules/tensor', methods=['POST'])
def module_tensor():
    """
    Inner tensor product of two simple modules
    Body: {algebra, a, b}
    """
    try:
        data = request.get_json(force=True, silent=True) or {}
        tag = _algebra(data)
        a = _partition(data, 'a')
        b = _partition(data, 'b')
        return jsonify({'ok': True, 'data': to_json(tensor_simple(tag, a, b))}), 200

    except LatticeSymError as e:
        return _domain_error(e)


@bp.route('/modules/character', methods=['POST'])
def module_character():
    """
    Character value of the simple module at a basis element
    Body: {algebra, module, at}
    """
    try:
        data = request.get_json(force=True, silent=True) or {}
        tag = _algebra(data)
        label = _partition(data, 'module')
        at = _partition(data, 'at')
        return jsonify({
            'ok': True,
            'data': {'algebra': tag.value, 'module': label.text(), 'at': at.text(),
                     'value': character(tag, label, at)}
        }), 200

    except LatticeSymError as e:
        return _domain_error(e)


@bp.route('/modules/frobenius', methods=['POST'])
def module_frobenius():
    """
    Frobenius image of a class in the Grothendieck group
    Body: {class: {algebra, terms: [{mult, partition} or {mult, left, right}]}}
    A class of pairs maps into NCSym ⊗ NCSym
    """
    try:
        data = request.get_json(force=True, silent=True) or {}
        s = module_sum_from_json(require_field(data, 'class'))
        require_degree_at_most('class', degree_of(s))
        image = frobenius_tensor(s.tag, s) if s.is_pair_sum() else frobenius(s.tag, s)
        return jsonify({'ok': True, 'data': to_json(image)}), 200

    except LatticeSymError as e:
        return _domain_error(e)

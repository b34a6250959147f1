"""
JSON codecs for partitions, NCSym elements, tensors, algebra elements and module classes
"""
import json
from pathlib import Path
from typing import Any, Dict, List, Union

from models.element import BasisTag, NCSymElement, TensorElement
from models.module import AlgebraElement, ModuleSum, ProductTag
from models.partition import SetPartition
from utils.errors import BoundTooLargeError, MalformedInputError
from utils.partitions import from_json_blocks, parse


# ---------------------------------------------------------------------------
# Encoding
# ---------------------------------------------------------------------------

def partition_to_json(a: SetPartition) -> List[List[int]]:
    return a.to_json()


def element_to_json(e: NCSymElement) -> Dict[str, Any]:
    return {
        'basis': e.basis.value,
        'terms': [{'coef': str(c), 'partition': a.to_json()} for a, c in e.items()]
    }


def tensor_to_json(t: TensorElement) -> Dict[str, Any]:
    return {
        'basis': [tag.value for tag in t.basis],
        'terms': [
            {'coef': str(c), 'left': a.to_json(), 'right': b.to_json()}
            for (a, b), c in t.items()
        ]
    }


def algebra_element_to_json(x: AlgebraElement) -> Dict[str, Any]:
    return {
        'algebra': x.tag.value,
        'n': x.n,
        'terms': [{'coef': str(c), 'partition': a.to_json()} for a, c in x.items()]
    }


def module_sum_to_json(s: ModuleSum) -> Dict[str, Any]:
    terms = []
    for key, mult in s.items():
        if isinstance(key, SetPartition):
            terms.append({'mult': mult, 'partition': key.to_json()})
        else:
            terms.append({'mult': mult, 'left': key[0].to_json(), 'right': key[1].to_json()})
    return {'algebra': s.tag.value, 'terms': terms}


def to_json(value: Any) -> Any:
    """Encode any library value for output"""
    if isinstance(value, SetPartition):
        return partition_to_json(value)
    if isinstance(value, NCSymElement):
        return element_to_json(value)
    if isinstance(value, TensorElement):
        return tensor_to_json(value)
    if isinstance(value, AlgebraElement):
        return algebra_element_to_json(value)
    if isinstance(value, ModuleSum):
        return module_sum_to_json(value)
    if isinstance(value, dict):
        return {k: to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    return value


def dumps(value: Any) -> str:
    """Deterministic JSON text"""
    return json.dumps(to_json(value), ensure_ascii=False, sort_keys=True)


# ---------------------------------------------------------------------------
# Decoding
# ---------------------------------------------------------------------------

def require_field(data: Any, key: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise MalformedInputError(f'Missing field {key!r}', {'field': key})
    return data[key]


def _coefficient(value: Any) -> int:
    if isinstance(value, bool):
        raise MalformedInputError('Coefficient must be an integer', {'value': value})
    if isinstance(value, int):
        return value
    try:
        return int(str(value))
    except ValueError:
        raise MalformedInputError(f'Coefficient {value!r} is not a decimal integer', {'value': value})


def enum_field(cls, value: Any, field: str):
    try:
        return cls(value)
    except ValueError:
        raise MalformedInputError(f'Unknown {field} {value!r}',
                                  {'field': field, 'value': value,
                                   'allowed': [m.value for m in cls]})


def partition_from_json(data: Union[str, List]) -> SetPartition:
    """Text grammar or block arrays"""
    if isinstance(data, str):
        return parse(data)
    return from_json_blocks(data)


def _terms(data: Any) -> List[Dict]:
    terms = require_field(data, 'terms')
    if not isinstance(terms, list):
        raise MalformedInputError('terms must be an array')
    return terms


def element_from_json(data: Any) -> NCSymElement:
    basis = enum_field(BasisTag, require_field(data, 'basis'), 'basis')
    return NCSymElement.from_terms(basis, (
        (partition_from_json(require_field(term, 'partition')), _coefficient(require_field(term, 'coef')))
        for term in _terms(data)
    ))


def tensor_from_json(data: Any) -> TensorElement:
    basis = require_field(data, 'basis')
    if not isinstance(basis, list) or len(basis) != 2:
        raise MalformedInputError('Tensor basis must be a pair', {'basis': basis})
    tags = (enum_field(BasisTag, basis[0], 'basis'), enum_field(BasisTag, basis[1], 'basis'))
    return TensorElement.from_terms(tags, (
        ((partition_from_json(require_field(term, 'left')), partition_from_json(require_field(term, 'right'))),
         _coefficient(require_field(term, 'coef')))
        for term in _terms(data)
    ))


def algebra_element_from_json(data: Any) -> AlgebraElement:
    tag = enum_field(ProductTag, require_field(data, 'algebra'), 'algebra')
    terms = [(partition_from_json(require_field(term, 'partition')), _coefficient(require_field(term, 'coef')))
             for term in _terms(data)]
    n = data.get('n', terms[0][0].n if terms else 0)
    return AlgebraElement.from_terms(tag, n, terms)


def module_sum_from_json(data: Any) -> ModuleSum:
    tag = enum_field(ProductTag, require_field(data, 'algebra'), 'algebra')
    terms = []
    for term in _terms(data):
        mult = _coefficient(require_field(term, 'mult'))
        if 'partition' in term:
            key = partition_from_json(term['partition'])
        else:
            key = (partition_from_json(require_field(term, 'left')),
                   partition_from_json(require_field(term, 'right')))
        terms.append((key, mult))
    return ModuleSum.from_terms(tag, terms)


# ---------------------------------------------------------------------------
# Request size limits
# ---------------------------------------------------------------------------

# Largest partition size an HTTP request may mention; Π_8 has 4140 elements
REQUEST_DEGREE_LIMIT = 8
# Δ⊙ in the m and x bases pairs up whole intervals, so it gets a tighter bound
INTERNAL_COPRODUCT_DEGREE_LIMIT = 6


def degree_of(value: Any) -> int:
    """Largest partition size appearing in a decoded value (0 when empty)"""
    if isinstance(value, SetPartition):
        return value.n
    if isinstance(value, AlgebraElement):
        return value.n
    if isinstance(value, (NCSymElement, TensorElement, ModuleSum)):
        sizes = [0]
        for key, _ in value.items():
            parts = key if isinstance(key, tuple) else (key,)
            sizes.extend(p.n for p in parts)
        return max(sizes)
    raise TypeError(f'No degree for {type(value).__name__}')


def require_degree_at_most(field: str, degree: int, limit: int = REQUEST_DEGREE_LIMIT) -> int:
    """
    Reject request payloads whose computation grows with Bell(degree)

    Raises:
        BoundTooLargeError: degree exceeds limit
    """
    if degree > limit:
        raise BoundTooLargeError(
            f'{field} has degree {degree}; requests are limited to {limit}',
            {'field': field, 'degree': degree, 'limit': limit}
        )
    return degree


def load_argument(text: str) -> Any:
    """Inline JSON, or '@path' to read JSON from a file"""
    if text.startswith('@'):
        try:
            text = Path(text[1:]).read_text(encoding='utf-8')
        except OSError as e:
            raise MalformedInputError(f'Cannot read {text[1:]}: {e}', {'path': text[1:]})
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInputError(f'Invalid JSON: {e.msg}', {'position': e.pos})


def element_argument(text: str, basis: BasisTag = BasisTag.M) -> NCSymElement:
    """
    Element from the command line

    Accepts element JSON (inline or '@path'), or a bare partition in text
    form read as the basis vector of the given basis.
    """
    stripped = text.strip()
    if stripped.startswith(('{', '@')):
        return element_from_json(load_argument(stripped))
    return NCSymElement(BasisTag(basis), {parse(stripped): 1})


def from_json(data: Any) -> Any:
    """Decode any documented JSON form back to its library value; inverse of to_json"""
    if isinstance(data, (str, list)):
        return partition_from_json(data)
    if isinstance(data, dict) and 'algebra' in data:
        # algebra elements always carry n; module classes never do
        if 'n' in data:
            return algebra_element_from_json(data)
        return module_sum_from_json(data)
    if isinstance(require_field(data, 'basis'), list):
        return tensor_from_json(data)
    return element_from_json(data)


def loads(text: str) -> Any:
    """Inverse of dumps"""
    try:
        return from_json(json.loads(text))
    except json.JSONDecodeError as e:
        raise MalformedInputError(f'Invalid JSON: {e.msg}', {'position': e.pos})

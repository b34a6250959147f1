"""
Regular representation cross-check
Materializes left multiplication on kΠ_n as exact integer matrices (numpy
object arrays) and confirms the idempotent decomposition the label-level code
relies on. Debug only: sizes grow as Bell(n)².
"""
import logging
from typing import Dict, List

import numpy as np

from models.module import AlgebraElement, ProductTag, SimpleModuleLabel
from models.partition import SetPartition
from services.latticealg import act_on_simple, alg_multiply, idempotent, unit_element
from utils.errors import BoundTooLargeError
from utils.partitions import partitions_of, refines

logger = logging.getLogger(__name__)

REGULAR_REP_LIMIT = 4


def _check_bound(n: int):
    if n > REGULAR_REP_LIMIT:
        raise BoundTooLargeError(f'Regular representation is limited to n <= {REGULAR_REP_LIMIT}',
                                 {'n': n, 'limit': REGULAR_REP_LIMIT})


def to_vector(x: AlgebraElement, basis: List[SetPartition]) -> np.ndarray:
    index = {a: i for i, a in enumerate(basis)}
    vector = np.zeros(len(basis), dtype=object)
    for a, c in x.items():
        vector[index[a]] = c
    return vector


def left_multiplication(tag: ProductTag, c: SetPartition) -> np.ndarray:
    """Matrix of y ↦ C·y in the partition basis of Π_n (column j = C·basis_j)"""
    basis = list(partitions_of(c.n))
    matrix = np.zeros((len(basis), len(basis)), dtype=object)
    left = AlgebraElement.basis(tag, c)
    for j, b in enumerate(basis):
        matrix[:, j] = to_vector(alg_multiply(left, AlgebraElement.basis(tag, b)), basis)
    return matrix


def idempotent_matrix(tag: ProductTag, n: int) -> np.ndarray:
    """Columns are the idempotents in the partition basis"""
    basis = list(partitions_of(n))
    return np.column_stack([to_vector(idempotent(tag, a), basis) for a in basis])


def check_regular_representation(tag: ProductTag, n: int) -> Dict[str, bool]:
    """
    Checks on the regular representation of the algebra on Π_n

    eigenlines: every idempotent spans a line on which C acts by act_on_simple
    triangular: the idempotent change of basis is unitriangular for refinement
    resolution: the idempotents sum to the unit
    """
    tag = ProductTag(tag)
    _check_bound(n)
    basis = list(partitions_of(n))
    change = idempotent_matrix(tag, n)

    eigenlines = True
    for c in basis:
        action = left_multiplication(tag, c)
        for j, a in enumerate(basis):
            scalar = act_on_simple(tag, c, SimpleModuleLabel(tag, a))
            if not np.array_equal(action.dot(change[:, j]), scalar * change[:, j]):
                eigenlines = False

    # meet idempotents live below their index, join idempotents above
    triangular = all(change[j, j] == 1 for j in range(len(basis)))
    for i, b in enumerate(basis):
        for j, a in enumerate(basis):
            if i == j or change[i, j] == 0:
                continue
            if tag == ProductTag.MEET and not refines(b, a):
                triangular = False
            elif tag == ProductTag.JOIN and not refines(a, b):
                triangular = False
            elif tag == ProductTag.DIAG:
                triangular = False

    unit = to_vector(unit_element(tag, n), basis)
    resolution = np.array_equal(change.sum(axis=1), unit)

    result = {'eigenlines': eigenlines, 'triangular': triangular, 'resolution': resolution}
    logger.debug(f'Regular representation {tag.value} n={n}: {result}')
    return result

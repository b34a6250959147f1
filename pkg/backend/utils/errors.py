"""
Domain errors
Every error carries a machine code for the API envelope and a details dict
"""
from typing import Any, Dict, Optional


class LatticeSymError(Exception):
    """Base class for all domain errors raised by the library"""

    code = 'DOMAIN_ERROR'

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert to the API error envelope body"""
        return {
            'code': self.code,
            'message': self.message,
            'details': self.details
        }


class PartitionSyntaxError(LatticeSymError, ValueError):
    """Partition text does not match the grammar"""
    code = 'SYNTAX_ERROR'


class OverlapError(LatticeSymError, ValueError):
    """An element appears in more than one block"""
    code = 'OVERLAP_ERROR'


class GapError(LatticeSymError, ValueError):
    """Union of the blocks is not an initial segment {1..n}"""
    code = 'GAP_ERROR'


class SizeMismatchError(LatticeSymError, ValueError):
    """Operands live over ground sets (or alphabets) of different size"""
    code = 'SIZE_MISMATCH'


class RangeError(LatticeSymError, ValueError):
    """Cut position outside [0, n]"""
    code = 'RANGE_ERROR'


class BlockIndexError(LatticeSymError, IndexError):
    """Block index outside 1..length"""
    code = 'INDEX_ERROR'


class NotComparableError(LatticeSymError, ValueError):
    """Pair is not comparable in the refinement order"""
    code = 'NOT_COMPARABLE'


class BasisMismatchError(LatticeSymError, ValueError):
    """Elements expressed in different bases were combined"""
    code = 'BASIS_MISMATCH'


class TagMismatchError(LatticeSymError, ValueError):
    """Algebra elements or module labels of different product tags were combined"""
    code = 'TAG_MISMATCH'


class NegativeMultiplicityError(LatticeSymError, ValueError):
    """Module classes only carry non-negative multiplicities"""
    code = 'NEGATIVE_MULTIPLICITY'


class NotInvariantError(LatticeSymError, ValueError):
    """Polynomial is not invariant under permutations of the alphabet"""
    code = 'NOT_INVARIANT'


class AlphabetTooSmallError(LatticeSymError, ValueError):
    """Finite alphabet would truncate the expansion"""
    code = 'ALPHABET_TOO_SMALL'


class UnknownSuiteError(LatticeSymError, ValueError):
    """Verification suite name is not registered"""
    code = 'UNKNOWN_SUITE'


class BoundTooLargeError(LatticeSymError, ValueError):
    """Requested bound or payload degree exceeds its cap"""
    code = 'BOUND_TOO_LARGE'


class MalformedInputError(LatticeSymError, ValueError):
    """JSON payload does not follow the documented schema"""
    code = 'MALFORMED_INPUT'

"""
Models package - Set partitions, NCSym elements, lattice algebra classes and reports
"""
from models.partition import SetPartition, IntegerPartitionShape
from models.element import BasisTag, NCSymElement, TensorElement
from models.module import ProductTag, AlgebraElement, SimpleModuleLabel, ModuleSum
from models.word import NCWord, NCPolynomial, PairWord
from models.report import ReportStatus, PropertyResult, VerifySuiteReport

__all__ = [
    'SetPartition',
    'IntegerPartitionShape',
    'BasisTag',
    'NCSymElement',
    'TensorElement',
    'ProductTag',
    'AlgebraElement',
    'SimpleModuleLabel',
    'ModuleSum',
    'NCWord',
    'NCPolynomial',
    'PairWord',
    'ReportStatus',
    'PropertyResult',
    'VerifySuiteReport'
]

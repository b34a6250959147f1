#!/usr/bin/env python3
"""
LatticeSym command line
Partition lattice queries, NCSym arithmetic, lattice algebra modules and the verification suites

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error
"""
import argparse
import sys
from typing import Any, List, Optional

from dotenv import load_dotenv

load_dotenv()

from models.element import BasisTag
from models.module import ModuleSum, ProductTag, SimpleModuleLabel
from services import latticealg, ncsym
from utils.errors import (
    BoundTooLargeError,
    LatticeSymError,
    MalformedInputError,
    UnknownSuiteError,
)
from utils.lattice import interval, mobius
from utils.logger import logger
from utils.partitions import (
    concat,
    enumerate_partitions,
    format_partition,
    join,
    meet,
    parse,
    refines,
    restrict,
    shape,
    split,
)
from utils.report_export import ReportExporter
from utils.serialization import dumps, element_argument, load_argument, module_sum_from_json
from workers.suites import SUITE_CAPS, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

USAGE_ERRORS = (UnknownSuiteError, BoundTooLargeError)

BASES = [tag.value for tag in BasisTag]
ALGEBRAS = [tag.value for tag in ProductTag]


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _emit(args, value: Any, text: Optional[str] = None):
    """JSON when requested, otherwise the human form"""
    if args.json or text is None:
        print(dumps(value))
    else:
        print(text)


def _partition_lines(partitions) -> str:
    return '\n'.join(format_partition(a) for a in partitions)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    partitions = list(enumerate_partitions(args.n))
    _emit(args, [format_partition(a) for a in partitions], _partition_lines(partitions))
    return EXIT_OK


def cmd_mobius(args) -> int:
    value = mobius(parse(args.b), parse(args.a))
    _emit(args, value, str(value))
    return EXIT_OK


def cmd_op(args) -> int:
    a = parse(args.a)
    op = args.operation

    if op == 'split':
        pieces = split(a, _int_operand(args.b, 'k'))
        if pieces is None:
            _emit(args, None, 'none')
        else:
            texts = [format_partition(p) for p in pieces]
            _emit(args, texts, ' '.join(texts))
        return EXIT_OK

    if op == 'restrict':
        indices = [_int_operand(s, 'block index') for s in args.b.split(',') if s.strip()]
        result = restrict(a, indices)
        _emit(args, format_partition(result), format_partition(result))
        return EXIT_OK

    b = parse(args.b)
    if op == 'refines':
        value = refines(a, b)
        _emit(args, value, 'true' if value else 'false')
    elif op == 'interval':
        members = interval(a, b)
        _emit(args, [format_partition(c) for c in members], _partition_lines(members))
    else:
        result = {'meet': meet, 'join': join, 'concat': concat}[op](a, b)
        _emit(args, format_partition(result), format_partition(result))
    return EXIT_OK


def _int_operand(text: str, name: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise MalformedInputError(f'{name} must be an integer, got {text!r}', {name: text})


def cmd_shape(args) -> int:
    lam = shape(parse(args.a))
    _emit(args, list(lam.parts), str(lam))
    return EXIT_OK


def cmd_convert(args) -> int:
    element = element_argument(args.element, BasisTag(args.source))
    result = ncsym.convert(element, BasisTag(args.target))
    _emit(args, result, str(result))
    return EXIT_OK


def cmd_mul(args) -> int:
    basis = BasisTag(args.basis)
    result = ncsym.multiply(element_argument(args.left, basis), element_argument(args.right, basis))
    _emit(args, result, str(result))
    return EXIT_OK


def cmd_coproduct(args) -> int:
    element = element_argument(args.element, BasisTag(args.basis))
    if args.kind == 'internal':
        result = ncsym.coproduct_internal(element)
    elif element.basis == BasisTag.X:
        result = ncsym.coproduct_external_x(element)
    else:
        result = ncsym.coproduct_external(element)
    _emit(args, result, str(result))
    return EXIT_OK


def _label(args, text: str) -> SimpleModuleLabel:
    return SimpleModuleLabel(ProductTag(args.algebra), parse(text))


def cmd_idempotent(args) -> int:
    result = latticealg.idempotent(ProductTag(args.algebra), parse(args.a))
    _emit(args, result, str(result))
    return EXIT_OK


def cmd_induct(args) -> int:
    result = latticealg.induct(ProductTag(args.algebra), _label(args, args.a), _label(args, args.b))
    _emit(args, result, str(result))
    return EXIT_OK


def cmd_restrict(args) -> int:
    result = latticealg.restrict(ProductTag(args.algebra), args.k, _label(args, args.a))
    _emit(args, result, str(result))
    return EXIT_OK


def cmd_tensor(args) -> int:
    result = latticealg.tensor_simple(ProductTag(args.algebra), parse(args.a), parse(args.b))
    _emit(args, result, str(result))
    return EXIT_OK


def cmd_character(args) -> int:
    value = latticealg.character(ProductTag(args.algebra), parse(args.module), parse(args.at))
    _emit(args, value, str(value))
    return EXIT_OK


def cmd_frobenius(args) -> int:
    tag = ProductTag(args.algebra)
    text = args.module_class.strip()
    if text.startswith(('{', '@')):
        s = module_sum_from_json(load_argument(text))
    else:
        s = ModuleSum.simple(SimpleModuleLabel(tag, parse(text)))
    if s.is_pair_sum():
        result = latticealg.frobenius_tensor(tag, s)
    else:
        result = latticealg.frobenius(tag, s)
    _emit(args, result, str(result))
    return EXIT_OK


def cmd_witness(args) -> int:
    witness = latticealg.find_incompatibility_witness(ProductTag(args.algebra), args.max_n)
    if witness is None:
        _emit(args, None, f'no witness up to degree {args.max_n}')
        return EXIT_OK
    tag = ProductTag(args.algebra)
    letter = tag.module_letter
    text = '\n'.join([
        f"degree {witness['degree']}: "
        f"{letter}[{witness['left'].text()}] (x) {letter}[{witness['right'].text()}]",
        f"  coproduct of product:   {witness['coproduct_of_product']}",
        f"  product of coproducts:  {witness['product_of_coproducts']}",
    ])
    _emit(args, witness, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_n, jobs=args.jobs, long=args.long)
    exporter = ReportExporter(include_timing=args.timing)
    if args.out:
        exporter.write(report, args.out)
    else:
        print(exporter.to_json_text(report))
    return EXIT_OK if report.failed == 0 else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _output_options(structured: bool) -> argparse.ArgumentParser:
    """Shared --json/--verbose flags; element-valued commands print JSON unless --text"""
    options = argparse.ArgumentParser(add_help=False)
    options.add_argument('--json', action='store_true', default=structured,
                         help='machine-readable output')
    options.add_argument('--verbose', action='store_true', help='debug logging on stderr')
    if structured:
        options.add_argument('--text', dest='json', action='store_false',
                             help='human-readable output')
    return options


def build_parser() -> argparse.ArgumentParser:
    common = _output_options(structured=False)
    structured = _output_options(structured=True)

    parser = argparse.ArgumentParser(
        prog='latticesym',
        description='Set partition lattice, NCSym and partition lattice algebras'
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('enumerate', parents=[common], help='partitions of [n] in canonical order')
    p.add_argument('n', type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser('mobius', parents=[common], help='μ(B, A) for B ≤ A')
    p.add_argument('b')
    p.add_argument('a')
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser('op', parents=[common], help='lattice operation on two partitions')
    p.add_argument('operation', choices=['meet', 'join', 'concat', 'refines', 'interval', 'split', 'restrict'])
    p.add_argument('a')
    p.add_argument('b', help='second partition, cut k for split, block indices "1,3" for restrict')
    p.set_defaults(func=cmd_op)

    p = sub.add_parser('shape', parents=[common], help='integer partition of block sizes')
    p.add_argument('a')
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser('convert', parents=[structured], help='change of basis in NCSym')
    p.add_argument('--from', dest='source', choices=BASES, default='m')
    p.add_argument('--to', dest='target', choices=BASES, required=True)
    p.add_argument('element', help='element JSON, @file, or a partition read in the --from basis')
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser('mul', parents=[structured], help='product in NCSym')
    p.add_argument('--basis', choices=BASES, default='m')
    p.add_argument('left')
    p.add_argument('right')
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser('coproduct', parents=[structured], help='external or internal coproduct')
    p.add_argument('--basis', choices=BASES, default='m')
    p.add_argument('--kind', choices=['external', 'internal'], default='external')
    p.add_argument('element')
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser('idempotent', parents=[structured], help='primitive idempotent of a partition')
    p.add_argument('--algebra', choices=ALGEBRAS, required=True)
    p.add_argument('a')
    p.set_defaults(func=cmd_idempotent)

    p = sub.add_parser('induct', parents=[structured], help='induction product of two simple modules')
    p.add_argument('--algebra', choices=ALGEBRAS, required=True)
    p.add_argument('a')
    p.add_argument('b')
    p.set_defaults(func=cmd_induct)

    p = sub.add_parser('restrict', parents=[structured], help='restriction of a simple module at cut k')
    p.add_argument('--algebra', choices=ALGEBRAS, required=True)
    p.add_argument('a')
    p.add_argument('k', type=int)
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser('tensor', parents=[structured], help='inner tensor product of two simple modules')
    p.add_argument('--algebra', choices=ALGEBRAS, required=True)
    p.add_argument('a')
    p.add_argument('b')
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser('character', parents=[common], help='character of a simple module at a basis element')
    p.add_argument('--algebra', choices=ALGEBRAS, required=True)
    p.add_argument('module')
    p.add_argument('at')
    p.set_defaults(func=cmd_character)

    p = sub.add_parser('frobenius', parents=[structured], help='Frobenius image of a module class')
    p.add_argument('--algebra', choices=ALGEBRAS, required=True)
    p.add_argument('module_class', metavar='class', help='class JSON, @file, or a partition')
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser('witness', parents=[structured],
                       help='smallest pair where induction and restriction are not compatible')
    p.add_argument('--algebra', choices=['meet', 'join'], required=True)
    p.add_argument('--max-n', type=int, default=3)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser('verify', parents=[common], help='run an exhaustive verification suite')
    p.add_argument('--suite', required=True, help=f"one of {', '.join(SUITE_CAPS)}")
    p.add_argument('--max-n', type=int, default=None)
    p.add_argument('--jobs', type=int, default=None)
    p.add_argument('--long', action='store_true', help='lift the theoremA cap')
    p.add_argument('--timing', action='store_true', help='include wall-clock duration in the report')
    p.add_argument('--out', default=None, help='write the report to PATH (.xlsx for a spreadsheet)')
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    if args.verbose:
        logger.set_level('DEBUG')

    try:
        return args.func(args)
    except USAGE_ERRORS as e:
        print(f'{type(e).__name__}: {e.message}', file=sys.stderr)
        return EXIT_USAGE
    except LatticeSymError as e:
        logger.error(f"❌ {type(e).__name__}: {e.message}", meta=e.details or None)
        print(f'{type(e).__name__}: {e.message}', file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == '__main__':
    sys.exit(main())

# -*- coding: utf-8 -*-
"""
Command-line front end.

    superspecial-verify verify --p 3
    superspecial-verify sweep --p-min 3 --p-max 200 --json

Exit codes: 0 all checks passed, 1 a check failed, 2 invalid input.
"""
from __future__ import print_function, absolute_import, division

import dataclasses
import json
import logging
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Tuple, Union, get_args, get_origin, get_type_hints

from sympy import primerange
from tqdm import tqdm

from .chern_map import (AuditReport, KummerReport, audit_paper_basis, c1_of_matrix, chern_matrix,
                        chern_rank_over_fp2, column, displayed_chern_columns,
                        endomorphism_action, kernel_basis, kernel_expressions, kummer_report,
                        make_field, phi, phi_quat, vanishes_through_lattice)
from .common.log import TableLogger, configure_logging
from .common.options import parse_args_function
from .ns_lattice import (DIVISOR_NAMES, coords_to_matrix, delta, diagonal_matrix,
                         fiber_e1, fiber_e2, gram_matrix, intersect, lattice_rows,
                         matrix_compose, matrix_to_coords, pullback, random_divisor, self_int,
                         swap_matrix)
from .quat_core import (ORDER_BASIS_NAMES, AlgebraParams, NotInOrder, OrderElement, ParameterError,
                        QuatElement, conj, make_params, nrd, order_basis_elements, random_order_element,
                        random_quat_element, to_order_coords, trd)

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2


@dataclasses.dataclass(frozen=True)
class RunReport:
    p: int
    q: int
    a: int
    order_basis: Tuple[str, ...]
    divisor_names: Tuple[str, ...]
    gram: Tuple[Tuple[int, ...], ...]
    gram_rank: int
    signature: Tuple[int, int]
    determinant: int
    chern: Tuple[Tuple[Tuple[int, int], ...], ...]
    chern_rank: int
    kernel_dimension: int
    image_dimension: int
    kernel_basis: Tuple[Tuple[int, ...], ...]
    kernel_divisors: Tuple[str, ...]
    audit: AuditReport
    kummer: KummerReport
    checks: Tuple[Tuple[str, bool], ...]
    passed: bool


@dataclasses.dataclass(frozen=True)
class SweepRow:
    p: int
    q: int
    a: int
    kernel_dimension: int
    image_dimension: int
    audit_ii_member: bool
    passed: bool


@dataclasses.dataclass(frozen=True)
class SweepReport:
    rows: Tuple[SweepRow, ...]
    passed: bool


def to_jsonable(obj):
    """Integers become decimal strings; tuples become lists."""
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError('cannot encode {!r}'.format(obj))


def from_jsonable(tp, value):
    if dataclasses.is_dataclass(tp):
        hints = get_type_hints(tp)
        return tp(**{f.name: from_jsonable(hints[f.name], value[f.name])
                     for f in dataclasses.fields(tp)})
    origin, args = get_origin(tp), get_args(tp)
    if origin is Union:
        if value is None:
            return None
        return from_jsonable(next(t for t in args if t is not type(None)), value)
    if origin is tuple:
        if len(args) == 2 and args[1] is Ellipsis:
            return tuple(from_jsonable(args[0], v) for v in value)
        return tuple(from_jsonable(t, v) for t, v in zip(args, value))
    if tp is bool:
        return bool(value)
    if tp is int:
        return int(value)
    if tp is str:
        return value
    raise TypeError('cannot decode {!r} as {}'.format(value, tp))


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2)


def report_to_json(report: RunReport) -> str:
    return dumps(report)


def report_from_json(text: str) -> RunReport:
    return from_jsonable(RunReport, json.loads(text))


def sweep_from_json(text: str) -> SweepReport:
    return from_jsonable(SweepReport, json.loads(text))


def check_samples(samples: int):
    if samples < 1:
        raise ParameterError('samples must be at least 1, got {}'.format(samples))


def _suite(n, rng, draw, check):
    return all(check(*draw(rng)) for _ in range(n))


def run_invariant_suites(params: AlgebraParams, seed: int = 0, samples: int = 200,
                         gram=None, kernel=None, audit=None):
    """
    Named pass/fail results of every runtime invariant, in a fixed order.

    gram, kernel and audit may be passed in when the caller already has them.
    """
    check_samples(samples)
    rng = random.Random(seed)
    field = make_field(params)
    checks = []

    def record(name, ok):
        if not ok:
            logger.warning('p=%d: check %s failed', params.p, name)
        checks.append((name, bool(ok)))

    try:
        params.check()
        record('params_valid', True)
    except ParameterError:
        record('params_valid', False)

    def quat_pair(r):
        return random_quat_element(params, r), random_quat_element(params, r)

    def order_pair(r):
        return random_order_element(params, r), random_order_element(params, r)

    record('anti_automorphism', _suite(samples, rng, quat_pair, lambda x, y:
                                       conj(x * y) == conj(y) * conj(x) and conj(conj(x)) == x))
    record('norm_multiplicative', _suite(samples, rng, quat_pair, lambda x, y:
                                         nrd(x * y) == nrd(x) * nrd(y)
                                         and x + conj(x) == QuatElement(params, trd(x))
                                         and (x.is_zero() or nrd(x) > 0)))

    def closed(x, y):
        try:
            x * y
        except NotInOrder:
            return False
        return True

    basis = order_basis_elements(params)
    record('order_closure', all(closed(x, y) for x in basis for y in basis)
           and _suite(samples, rng, order_pair, closed))
    record('order_round_trip', _suite(samples, rng, lambda r: (random_order_element(params, r),),
                                      lambda x: to_order_coords(x.to_quat()) == x.coords
                                      and nrd(x.to_quat()).denominator == 1
                                      and trd(x.to_quat()).denominator == 1))

    def random_coords(r):
        return ([r.randint(-30, 30) for _ in range(6)],)

    record('divisor_round_trip', _suite(samples, rng, random_coords, lambda v:
                                        matrix_to_coords(coords_to_matrix(params, v)) == tuple(v)))
    record('delta_intersection_is_norm', _suite(samples, rng, order_pair, lambda x, y:
                                                intersect(delta(x), delta(y)) == (x - y).nrd()))
    e1, e2 = fiber_e1(params), fiber_e2(params)

    def divisor_pair(r):
        return random_divisor(params, r), random_divisor(params, r)

    record('fiber_intersections', _suite(samples, rng, divisor_pair, lambda L, M:
                                         intersect(L, e1) == L.A and intersect(L, e2) == L.D
                                         and intersect(L, M) == intersect(M, L)
                                         and self_int(L) == intersect(L, L)
                                         and self_int(L) % 2 == 0))

    def small_matrix(r):
        return tuple(tuple(random_order_element(params, r, 3) for _ in range(2)) for _ in range(2))

    identity = diagonal_matrix(OrderElement.from_int(params, 1), OrderElement.from_int(params, 1))
    record('pullback_composition', _suite(
        max(1, samples // 10), rng,
        lambda r: (small_matrix(r), small_matrix(r), random_divisor(params, r, 3)),
        lambda g, h, L: pullback(identity, L) == L
        and pullback(matrix_compose(g, h), L) == pullback(h, pullback(g, L))))

    gram = gram or gram_matrix(params)
    rows = lattice_rows(gram.matrix)
    record('gram_symmetric_even', all(rows[i][j] == rows[j][i] for i in range(6) for j in range(6))
           and all(rows[i][i] % 2 == 0 for i in range(6)))
    record('gram_rank_6', gram.rank == 6)
    record('gram_signature_1_5', gram.signature == (1, 5))

    p = params.p
    record('phi_ring_homomorphism',
           phi(field, OrderElement.from_int(params, 1)) == field.one
           and all(phi(field, OrderElement.from_int(params, n)) == field(n) for n in range(-p, p + 1))
           and _suite(samples, rng, order_pair, lambda x, y:
                      phi(field, x + y) == phi(field, x) + phi(field, y)
                      and phi(field, x * y) == phi(field, x) * phi(field, y)
                      and phi(field, x) == phi_quat(field, x.to_quat())))

    def conj_frobenius(x):
        fx = phi(field, x)
        ok = phi(field, x.conj()) == fx.frobenius() and fx.frobenius() == fx ** p
        if not fx.is_zero():
            ok = ok and fx.frobenius() == fx.inverse() * x.nrd()
        return ok

    record('phi_conj_is_frobenius', _suite(samples, rng, lambda r: (random_order_element(params, r),),
                                           conj_frobenius))

    matrix = chern_matrix(params, field)
    displayed = displayed_chern_columns(params, field)
    record('displayed_chern_values', all(column(matrix, j) == displayed[j] for j in range(6)))
    record('u5_equals_u2', column(matrix, 4) == column(matrix, 1))
    record('chern_rank_fp2_4', chern_rank_over_fp2(matrix) == 4)

    kernel = kernel or kernel_basis(params, field)
    record('kernel_dimension_2', kernel.dimension == 2)
    record('image_dimension_4', kernel.image_dimension == 4)
    record('kernel_vanishes_through_lattice',
           all(vanishes_through_lattice(params, v, field) for v in kernel.vectors))
    record('galois_invariance', kernel_basis(params, make_field(params, -1)).vectors == kernel.vectors)

    audit = audit or audit_paper_basis(params, field)
    record('candidate_i_member', audit.candidate('i').member)
    record('corrected_second_vector_member', audit.candidate('corrected').member)

    def functorial(a1, a2, L):
        action = endomorphism_action(field, a1, a2)
        lhs = c1_of_matrix(field, pullback(diagonal_matrix(a1, a2), L))
        return lhs == tuple(m * c for m, c in zip(action, c1_of_matrix(field, L)))

    record('endomorphism_functoriality', _suite(
        samples, rng,
        lambda r: (random_order_element(params, r, 10), random_order_element(params, r, 10),
                   random_divisor(params, r, 10)),
        functorial))
    swap = swap_matrix(params)
    record('swap_symmetry', _suite(samples, rng, lambda r: (random_divisor(params, r),), lambda L:
                                   c1_of_matrix(field, pullback(swap, L))
                                   == tuple(reversed(c1_of_matrix(field, L)))))
    return tuple(checks)


def build_report(params: AlgebraParams, seed: int = 0, samples: int = 200) -> RunReport:
    field = make_field(params)
    gram = gram_matrix(params)
    matrix = chern_matrix(params, field)
    kernel = kernel_basis(params, field)
    audit = audit_paper_basis(params, field)
    checks = run_invariant_suites(params, seed, samples, gram, kernel, audit)
    return RunReport(
        p=params.p, q=params.q, a=params.a,
        order_basis=ORDER_BASIS_NAMES,
        divisor_names=DIVISOR_NAMES,
        gram=tuple(lattice_rows(gram.matrix)),
        gram_rank=gram.rank,
        signature=gram.signature,
        determinant=gram.determinant,
        chern=tuple(tuple(x.pair() for x in row) for row in matrix),
        chern_rank=chern_rank_over_fp2(matrix),
        kernel_dimension=kernel.dimension,
        image_dimension=kernel.image_dimension,
        kernel_basis=kernel.vectors,
        kernel_divisors=tuple(kernel_expressions(params, kernel.vectors)),
        audit=audit,
        kummer=kummer_report(params, kernel),
        checks=checks,
        passed=all(ok for _, ok in checks),
    )


def _fp2_text(pair):
    c0, c1 = pair
    if c1 == 0:
        return str(c0)
    t = 't' if c1 == 1 else '{}t'.format(c1)
    return t if c0 == 0 else '{}+{}'.format(c0, t)


def _params_text(p, q, a):
    return 'p = {}, q = {}, a = {}'.format(p, q, a)


def _gram_text(names, gram, rank, signature, determinant):
    width = max(len(str(x)) for row in gram for x in row)
    lines = ['Gram matrix on ({}):'.format(', '.join(names))]
    lines += ['  ' + ' '.join(str(x).rjust(width) for x in row) for row in gram]
    lines.append('rank {}, signature {}, determinant {}'.format(rank, signature, determinant))
    return '\n'.join(lines)


def _chern_text(p, q, chern):
    lines = ['Chern matrix over F_{}^2, t^2 = {} (columns u1..u6, rows Ω1..Ω4):'.format(p, -q % p)]
    cells = [[_fp2_text(x) for x in row] for row in chern]
    width = max(len(c) for row in cells for c in row)
    lines += ['  ' + ' '.join(c.rjust(width) for c in row) for row in cells]
    return '\n'.join(lines)


def _kernel_text(dimension, image_dimension, vectors, expressions):
    lines = ['kernel dimension {}, image dimension {}'.format(dimension, image_dimension)]
    for v, e in zip(vectors, expressions):
        lines.append('  {}  {}'.format(v, e))
    return '\n'.join(lines)


def _audit_text(audit: AuditReport):
    lines = ['audit of the printed kernel basis (ℓ = {}):'.format(audit.ell)]
    if audit.literal_subscript_in_order:
        lines.append('  literal subscript (2+Fα)/q is an order element')
    else:
        lines.append('  literal reading not an order element: (2+Fα)/q has order coordinates ({})'
                     .format(', '.join(audit.literal_subscript_coords)))
    for c in audit.candidates:
        status = 'member' if c.member else 'NOT a member, residual ({})'.format(
            ', '.join(_fp2_text(x) for x in c.residual))
        tag = ' [derived]' if c.derived else ''
        lines.append('  ({}){} {} {}: {}'.format(c.label, tag, c.formula, c.vector, status))
    return '\n'.join(lines)


def _kummer_text(k: KummerReport):
    return '\n'.join([
        'Kummer surface Km(A), p = {}:'.format(k.p),
        '  NS(Km A)/p = NS(A~)/p: {}'.format('yes' if k.mod_p_isomorphic else 'no'),
        '  rank NS(A~) = {} + {} = {}'.format(k.abelian_rank, k.exceptional_curves, k.blowup_rank),
        '  Artin invariant {}, discriminant {}'.format(k.artin_invariant, k.discriminant),
        '  dim Ker c1 = {}'.format(k.kernel_dimension),
    ])


def render_text(report: RunReport) -> str:
    parts = [
        _params_text(report.p, report.q, report.a),
        'order basis: ' + ', '.join(report.order_basis),
        _gram_text(report.divisor_names, report.gram, report.gram_rank, report.signature,
                   report.determinant),
        _chern_text(report.p, report.q, report.chern),
        'rank over F_{}^2: {}'.format(report.p, report.chern_rank),
        _kernel_text(report.kernel_dimension, report.image_dimension, report.kernel_basis,
                     report.kernel_divisors),
        _audit_text(report.audit),
        _kummer_text(report.kummer),
        'checks:\n' + '\n'.join('  {:<34} {}'.format(name, 'ok' if ok else 'FAILED')
                                for name, ok in report.checks),
        'PASS' if report.passed else 'FAIL',
    ]
    return '\n'.join(parts)


def _emit(args, obj, text, out):
    print(dumps(obj) if args.json else text, file=out)


def _params_from_args(args) -> AlgebraParams:
    return make_params(args.p, args.q, args.a, args.q_cap)


def cmd_params(args, out=sys.stdout) -> int:
    params = _params_from_args(args)
    _emit(args, params, _params_text(params.p, params.q, params.a), out)
    return EXIT_OK


def cmd_gram(args, out=sys.stdout) -> int:
    params = _params_from_args(args)
    gram = gram_matrix(params)
    rows = lattice_rows(gram.matrix)
    doc = {'p': params.p, 'q': params.q, 'a': params.a, 'gram': rows, 'rank': gram.rank,
           'signature': gram.signature, 'determinant': gram.determinant}
    _emit(args, doc, _gram_text(DIVISOR_NAMES, rows, gram.rank, gram.signature, gram.determinant), out)
    return EXIT_OK


def cmd_c1(args, out=sys.stdout) -> int:
    params = _params_from_args(args)
    field = make_field(params)
    matrix = chern_matrix(params, field)
    chern = [[x.pair() for x in row] for row in matrix]
    doc = {'p': params.p, 'q': params.q, 'a': params.a, 'chern': chern,
           'rank': chern_rank_over_fp2(matrix)}
    _emit(args, doc, _chern_text(params.p, params.q, chern), out)
    return EXIT_OK


def cmd_kernel(args, out=sys.stdout) -> int:
    params = _params_from_args(args)
    field = make_field(params)
    kernel = kernel_basis(params, field)
    audit = audit_paper_basis(params, field)
    expressions = kernel_expressions(params, kernel.vectors)
    doc = {'p': params.p, 'q': params.q, 'a': params.a, 'kernel': kernel,
           'kernel_divisors': expressions, 'audit': audit}
    text = _kernel_text(kernel.dimension, kernel.image_dimension, kernel.vectors, expressions)
    _emit(args, doc, text + '\n' + _audit_text(audit), out)
    return EXIT_OK


def cmd_kummer(args, out=sys.stdout) -> int:
    params = _params_from_args(args)
    report = kummer_report(params)
    _emit(args, report, _kummer_text(report), out)
    return EXIT_OK


def cmd_verify(args, out=sys.stdout) -> int:
    check_samples(args.samples)
    params = _params_from_args(args)
    report = build_report(params, args.seed, args.samples)
    _emit(args, report, render_text(report), out)
    return EXIT_OK if report.passed else EXIT_FAILED


def _sweep_one(p, q_cap, seed, samples) -> SweepRow:
    params = make_params(p, q_cap=q_cap)
    start = time.time()
    report = build_report(params, seed, samples)
    logger.debug('p=%d done in %.2fs', p, time.time() - start)
    return SweepRow(p, params.q, params.a, report.kernel_dimension, report.image_dimension,
                    report.audit.candidate('ii').member, report.passed)


def cmd_sweep(args, out=sys.stdout) -> int:
    check_samples(args.samples)
    if args.p_min > args.p_max:
        raise ParameterError('empty range: --p-min {} > --p-max {}'.format(args.p_min, args.p_max))
    primes = [int(p) for p in primerange(max(args.p_min, 3), args.p_max + 1)]
    if not primes:
        raise ParameterError('no prime >= 3 in [{}, {}]'.format(args.p_min, args.p_max))
    work = partial(_sweep_one, q_cap=args.q_cap, seed=args.seed, samples=args.samples)
    start = time.time()
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(tqdm(pool.map(work, primes), total=len(primes), desc='sweep'))
    else:
        rows = [work(p) for p in tqdm(primes, desc='sweep')]
    logger.info('swept %d primes in %.1fs', len(rows), time.time() - start)
    report = SweepReport(tuple(rows), all(r.passed for r in rows))
    if args.json:
        print(dumps(report), file=out)
    else:
        table = TableLogger(out)
        table.set_names(['p', 'q', 'a', 'ker-dim', 'im-dim', 'audit-ii', 'pass'])
        for r in rows:
            table.append([r.p, r.q, r.a, r.kernel_dimension, r.image_dimension,
                          'yes' if r.audit_ii_member else 'no', 'yes' if r.passed else 'no'])
        print('{} primes, {}'.format(len(rows), 'all passed' if report.passed else 'FAILURES'), file=out)
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS = {
    'params': cmd_params,
    'gram': cmd_gram,
    'c1': cmd_c1,
    'kernel': cmd_kernel,
    'verify': cmd_verify,
    'sweep': cmd_sweep,
    'kummer': cmd_kummer,
}


def main(argv=None) -> int:
    try:
        args = parse_args_function(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    configure_logging(args.verbose, args.log_file)
    try:
        return COMMANDS[args.command](args, out=sys.stdout)
    except ParameterError as exc:
        logger.error('invalid input: %s', exc)
        return EXIT_INVALID


if __name__ == '__main__':
    sys.exit(main())

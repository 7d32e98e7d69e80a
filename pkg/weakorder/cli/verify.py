# -*- coding: utf-8 -*-
"""
Named verification suites.

A suite expands a maximum degree into independent cells. Each cell returns the
counterexamples it found as text lines; an empty list means the cell passed.
Cells may run on a thread pool, but are always reported in cell order.
"""
import collections
import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

import networkx as nx

from ..algebra import bilinear_extend
from ..algebra.products import (phi_star, phi_star_of, prec_S, prec_S_interval,
                                prec_Y, psi_star, psi_star_of, star_Q,
                                star_Q_interval, star_S, star_S_interval,
                                star_Y, star_Y_interval, succ_S,
                                succ_S_interval, succ_Y)
from ..algebra.free import FreeElement
from ..combinat import cube, perm, tree
from ..combinat.perm import Permutation
from ..config.main import CONF
from ..coxeter import (DihedralGroup, HyperoctahedralGroup, SymmetricGroup,
                       longest_element, parabolic_factor, parabolic_subgroup,
                       w_j_0, weak_leq, x_j_0, x_j_set)

logger = logging.getLogger(__name__)

Cell = Tuple[str, Callable[[], List[str]]]

SUITES: Dict[str, Callable[[int], List[Cell]]] = {}


def suite(name: str):
    def register(func):
        SUITES[name] = func
        return func
    return register


def run_suite(name: str, max_degree: int, workers: int = 1) -> Tuple[int, List[str]]:
    """
    Runs every cell of a suite.

    :returns: ``(number of failed cells, report lines)``.
    :raises ValueError: for an unknown suite name or a negative degree.
    """
    if name not in SUITES:
        raise ValueError('Unknown suite {!r}, choose from {}'.format(
            name, ', '.join(sorted(SUITES))))
    if max_degree < 0:
        raise ValueError('Maximum degree must be non-negative, got {}'.format(max_degree))

    cells = SUITES[name](max_degree)
    logger.info('Suite %s: %s cells up to degree %s', name, len(cells), max_degree)

    def run_cell(cell: Cell) -> List[str]:
        label, check = cell
        try:
            return check()
        except Exception as exc:
            logger.exception('Error in cell %s', label)
            return ['error: {}'.format(exc)]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_cell, cells))
    else:
        results = [run_cell(cell) for cell in cells]

    failures, report = 0, []
    for (label, _), problems in zip(cells, results):
        if problems:
            failures += 1
            report.append('FAIL {}'.format(label))
            report.extend('    {}'.format(p) for p in problems)
            for p in problems:
                logger.warning('%s: %s', label, p)
        else:
            report.append('ok   {}'.format(label))
            logger.info('%s passed', label)
    return failures, report


# =============================================================================
# Helpers
# =============================================================================

def _splits(n: int, lowest: int = 0) -> Iterable[Tuple[int, int]]:
    return ((p, n - p) for p in range(lowest, n - lowest + 1))


def _triples(n: int, lowest: int = 1) -> Iterable[Tuple[int, int, int]]:
    return ((p, q, n - p - q) for p in range(lowest, n + 1)
            for q in range(lowest, n - p + 1) if n - p - q >= lowest)


def _mismatch(what: str, args: Sequence, left, right) -> List[str]:
    if left == right:
        return []
    return ['{} fails for {}: {!r} != {!r}'.format(
        what, ', '.join(repr(str(a)) for a in args), left, right)]


def _closure_pairs(edges: Iterable[Tuple], nodes: Iterable) -> set:
    graph = nx.DiGraph()
    graph.add_nodes_from(nodes)
    graph.add_edges_from(edges)
    closure = nx.transitive_closure(graph, reflexive=True)
    return set(closure.edges)


def _star(product):
    return lambda a, b: bilinear_extend(product, a, b)


# =============================================================================
# Interval formulas for the products
# =============================================================================

@suite('thm4.1')
def _thm41(max_degree):
    def cell(n):
        def check():
            problems = []
            for p, q in _splits(n):
                for sigma in perm.enumerate_perms(p):
                    for tau in perm.enumerate_perms(q):
                        direct = star_S(sigma, tau)
                        problems += _mismatch('star = interval', (sigma, tau),
                                              direct, star_S_interval(sigma, tau))
                        if set(direct.values()) - {1} or len(direct) != math.comb(n, p):
                            problems.append('{} * {} is not a sum of {} distinct terms'.format(
                                sigma, tau, math.comb(n, p)))
            return problems
        return 'permutations of total degree {}'.format(n), check
    return [cell(n) for n in range(max_degree + 1)]


@suite('thm5.1')
def _thm51(max_degree):
    def cell(n):
        def check():
            problems = []
            for p, q in _splits(n):
                for t in tree.enumerate_trees(p):
                    for w in tree.enumerate_trees(q):
                        problems += _mismatch('tree star = interval', (t, w),
                                              star_Y(t, w), star_Y_interval(t, w))
            return problems
        return 'trees of total degree {}'.format(n), check
    return [cell(n) for n in range(max_degree + 1)]


@suite('thm6.1')
def _thm61(max_degree):
    def cell(n):
        def check():
            problems = []
            for p, q in _splits(n, lowest=1):
                for eps in cube.enumerate_sign_vectors(p):
                    for delta in cube.enumerate_sign_vectors(q):
                        low, high = cube.over_cube(eps, delta), cube.under_cube(eps, delta)
                        expected = FreeElement.sum_of((low, high))
                        problems += _mismatch('cube star', (eps, delta), star_Q(eps, delta), expected)
                        problems += _mismatch('cube star = interval', (eps, delta),
                                              star_Q_interval(eps, delta), expected)
                        if len(cube.cube_interval(low, high)) != 2:
                            problems.append('[{}, {}] is not a two element interval'.format(low, high))
            return problems
        return 'sign vectors of total degree {}'.format(n), check
    return [cell(n) for n in range(2, max_degree + 1)]


# =============================================================================
# Fibers
# =============================================================================

@suite('thm2.5')
def _thm25(max_degree):
    def cell(n):
        def check():
            preimages = {}
            for sigma in perm.enumerate_perms(n):
                preimages.setdefault(tree.psi(sigma), []).append(sigma)
            problems = []
            total = 0
            for t in tree.enumerate_trees(n):
                found = tuple(sorted(preimages.get(t, [])))
                total += len(found)
                problems += _mismatch('psi fiber = [Min, Max]', (t,), tree.fiber(t), found)
            if total != math.factorial(n):
                problems.append('fibers of grade {} cover {} permutations'.format(n, total))
            return problems
        return 'psi fibers in grade {}'.format(n), check
    return [cell(n) for n in range(1, max_degree + 1)]


@suite('prop3.5')
def _prop35(max_degree):
    def cell(n):
        def check():
            preimages = {}
            for t in tree.enumerate_trees(n):
                preimages.setdefault(cube.phi(t), []).append(t)
            problems = []
            total = 0
            for eps in cube.enumerate_sign_vectors(n):
                found = tuple(sorted(preimages.get(eps, []), key=lambda t: t.serialized))
                total += len(found)
                problems += _mismatch('phi fiber = [min, max]', (eps,), cube.phi_fiber(eps), found)
            catalan = math.comb(2 * n, n) // (n + 1)
            if total != catalan:
                problems.append('fibers of grade {} cover {} trees, expected {}'.format(
                    n, total, catalan))
            return problems
        return 'phi fibers in grade {}'.format(n), check
    return [cell(n) for n in range(1, max_degree + 1)]


@suite('thm2.9')
def _thm29(max_degree):
    def cell(n):
        def check():
            problems = []
            for p, q in _splits(n):
                for sigma in perm.enumerate_perms(p):
                    for tau in perm.enumerate_perms(q):
                        u, v = tree.psi(sigma), tree.psi(tau)
                        problems += _mismatch('psi(over)', (sigma, tau),
                                              tree.psi(perm.over_perm(sigma, tau)), tree.over_tree(u, v))
                        problems += _mismatch('psi(under)', (sigma, tau),
                                              tree.psi(perm.under_perm(sigma, tau)), tree.under_tree(u, v))
            return problems
        return 'psi against over/under in degree {}'.format(n), check
    return [cell(n) for n in range(max_degree + 1)]


# =============================================================================
# Dendriform structure
# =============================================================================

def _dendriform_problems(label, basis, star, prec, succ, p, q, r) -> List[str]:
    problems = []
    mul, left, right = _star(star), _star(prec), _star(succ)
    for a in basis(p):
        for b in basis(q):
            for c in basis(r):
                x, y, z = FreeElement.of(a), FreeElement.of(b), FreeElement.of(c)
                args = (a, b, c)
                problems += _mismatch(label + ' (x<y)<z = x<(y*z)', args,
                                      left(left(x, y), z), left(x, mul(y, z)))
                problems += _mismatch(label + ' (x>y)<z = x>(y<z)', args,
                                      left(right(x, y), z), right(x, left(y, z)))
                problems += _mismatch(label + ' (x*y)>z = x>(y>z)', args,
                                      right(mul(x, y), z), right(x, right(y, z)))
                problems += _mismatch(label + ' associativity', args,
                                      mul(mul(x, y), z), mul(x, mul(y, z)))
    return problems


@suite('prop4.5')
def _prop45(max_degree):
    cells = []
    for n in range(3, max_degree + 1):
        for p, q, r in _triples(n):
            def check(p=p, q=q, r=r):
                return (_dendriform_problems('perm', perm.enumerate_perms, star_S, prec_S, succ_S, p, q, r)
                        + _dendriform_problems('tree', tree.enumerate_trees, star_Y, prec_Y, succ_Y, p, q, r))
            cells.append(('dendriform relations in degrees {}, {}, {}'.format(p, q, r), check))

        def check_cube(n=n):
            problems = []
            mul = _star(star_Q)
            for p, q, r in _triples(n):
                for a in cube.enumerate_sign_vectors(p):
                    for b in cube.enumerate_sign_vectors(q):
                        for c in cube.enumerate_sign_vectors(r):
                            x, y, z = FreeElement.of(a), FreeElement.of(b), FreeElement.of(c)
                            problems += _mismatch('cube associativity', (a, b, c),
                                                  mul(mul(x, y), z), mul(x, mul(y, z)))
            return problems
        cells.append(('cube associativity in degree {}'.format(n), check_cube))
    return cells


@suite('prop4.6')
def _prop46(max_degree):
    def cell(n):
        def check():
            problems = []
            for p, q in _splits(n, lowest=1):
                for sigma in perm.enumerate_perms(p):
                    for tau in perm.enumerate_perms(q):
                        args = (sigma, tau)
                        below, above = prec_S(sigma, tau), succ_S(sigma, tau)
                        problems += _mismatch('prec interval', args, below, prec_S_interval(sigma, tau))
                        problems += _mismatch('succ interval', args, above, succ_S_interval(sigma, tau))
                        problems += _mismatch('prec + succ = star', args, below + above, star_S(sigma, tau))
            return problems
        return 'dendriform intervals in degree {}'.format(n), check
    return [cell(n) for n in range(2, max_degree + 1)]


@suite('prop5.3')
def _prop53(max_degree):
    def cell(n):
        def check():
            problems = []
            for p, q in _splits(n):
                for t in tree.enumerate_trees(p):
                    for w in tree.enumerate_trees(q):
                        args = (t, w)
                        image_t, image_w = psi_star(t), psi_star(w)
                        problems += _mismatch('psi* preserves *', args,
                                              psi_star_of(star_Y(t, w)),
                                              bilinear_extend(star_S, image_t, image_w))
                        if p and q:
                            problems += _mismatch('psi* preserves <', args,
                                                  psi_star_of(prec_Y(t, w)),
                                                  bilinear_extend(prec_S, image_t, image_w))
                            problems += _mismatch('psi* preserves >', args,
                                                  psi_star_of(succ_Y(t, w)),
                                                  bilinear_extend(succ_S, image_t, image_w))
                            problems += _mismatch('tree < + > = *', args,
                                                  prec_Y(t, w) + succ_Y(t, w), star_Y(t, w))
            for p, q in _splits(n):
                for eps in cube.enumerate_sign_vectors(p):
                    for delta in cube.enumerate_sign_vectors(q):
                        problems += _mismatch('phi* preserves *', (eps, delta),
                                              phi_star_of(star_Q(eps, delta)),
                                              bilinear_extend(star_Y, phi_star(eps), phi_star(delta)))
            if n:
                composite = {}
                for sigma in perm.enumerate_perms(n):
                    composite.setdefault(cube.phi(tree.psi(sigma)), []).append(sigma)
                for eps in cube.enumerate_sign_vectors(n):
                    problems += _mismatch('psi* phi* counts phi psi fibers', (eps,),
                                          psi_star_of(phi_star(eps)),
                                          FreeElement.sum_of(composite.get(eps, ())))
            return problems
        return 'algebra maps in degree {}'.format(n), check
    return [cell(n) for n in range(max_degree + 1)]


# =============================================================================
# Coxeter systems
# =============================================================================

def _coxeter_instances(max_degree):
    instances = [SymmetricGroup(n) for n in range(2, max_degree + 1)]
    instances += [HyperoctahedralGroup(n)
                  for n in range(1, CONF.get('Verify', 'type_b_max_rank') + 1)]
    instances += [DihedralGroup(m)
                  for m in range(2, CONF.get('Verify', 'dihedral_max_order') + 1)]
    return instances


def _subsets(W):
    indices = range(W.rank)
    return [frozenset(J) for k in range(W.rank + 1) for J in itertools.combinations(indices, k)]


@suite('propA.2')
def _propA2(max_degree):
    def cell(W):
        def check():
            problems = []
            lengths = W.word_lengths()
            for w in W.elements():
                if lengths[w] != W.length(w):
                    problems.append('length({!r}) = {} but word length is {}'.format(
                        w, W.length(w), lengths[w]))
                for i in range(W.rank):
                    for nxt in (W.multiply_left(i, w), W.multiply_right(w, i)):
                        if abs(W.length(nxt) - W.length(w)) != 1:
                            problems.append('a generator does not change the length of {!r} by one'.format(w))
            for J in _subsets(W):
                X, W_J = x_j_set(W, J), parabolic_subgroup(W, J)
                representatives = set(X)
                if len(X) * len(W_J) != len(W.elements()):
                    problems.append('|X_J| |W_J| != |W| for J={}'.format(sorted(J)))
                for w in W.elements():
                    hits = [y for y in W_J if W.multiply(w, W.inverse(y)) in representatives]
                    if len(hits) != 1:
                        problems.append('{!r} has {} factorizations for J={}'.format(w, len(hits), sorted(J)))
                        continue
                    x, y = parabolic_factor(W, w, J)
                    if W.multiply(x, y) != w or W.length(x) + W.length(y) != W.length(w):
                        problems.append('bad factorization {!r} = {!r} . {!r}'.format(w, x, y))
            return problems
        return 'parabolic factorization in {!r}'.format(W), check
    return [cell(W) for W in _coxeter_instances(max_degree)]


@suite('corA.4')
def _corA4(max_degree):
    def cell(W):
        def check():
            problems = []
            top, unit = longest_element(W), W.unit()
            for w in W.elements():
                if not (weak_leq(W, unit, w) and weak_leq(W, w, top)):
                    problems.append('{!r} is not between the unit and w^0'.format(w))
            for J in _subsets(W):
                x0, w0 = x_j_0(W, J), w_j_0(W, J)
                below = tuple(w for w in W.elements() if weak_leq(W, w, x0))
                if below != x_j_set(W, J):
                    problems.append('X_J != [1, x_J^0] for J={}'.format(sorted(J)))
                if W.multiply(x0, w0) != top:
                    problems.append('w^0 != x_J^0 . w_J^0 for J={}'.format(sorted(J)))
            return problems
        return 'coset representatives in {!r}'.format(W), check

    def type_a(n):
        def check():
            problems = []
            W = SymmetricGroup(n)
            for a in W.elements():
                for b in W.elements():
                    if weak_leq(W, a, b) != perm.leq_weak(a, b):
                        problems.append('weak orders differ on {}, {}'.format(a, b))
            for p in range(1, n):
                J = set(range(n - 1)) - {p - 1}
                q = n - p
                problems += _mismatch('X_J = Sh', (p, q), tuple(sorted(x_j_set(W, J))), perm.shuffles(p, q))
                problems += _mismatch('x_J^0 = xi', (p, q), x_j_0(W, J), perm.xi(p, q))
            return problems
        return 'type A against permutations, n = {}'.format(n), check

    return ([cell(W) for W in _coxeter_instances(max_degree)]
            + [type_a(n) for n in range(2, max_degree + 1)])


# =============================================================================
# Lemmas on permutations, trees and cube vertices
# =============================================================================


def _weak_order_lemmas(n) -> List[str]:
    problems = []
    perms = perm.enumerate_perms(n)
    closure = _closure_pairs(((w, c) for w in perms for c in perm.up_covers(w)), perms)
    for a in perms:
        if len(perm.up_covers(a)) + len(perm.down_covers(a)) != max(n - 1, 0):
            problems.append('{} does not have n - 1 neighbours'.format(a))
        if perm.length(a) != perm.reduced_word_length(a):
            problems.append('inversions of {} differ from its word length'.format(a))
        for b in perms:
            if perm.leq_weak(a, b) != ((a, b) in closure):
                problems.append('leq_weak({}, {}) disagrees with the cover closure'.format(a, b))
    return problems


def _max_decomposition_lemmas(n) -> List[str]:
    if n == 0:
        return []
    problems = []
    perms = perm.enumerate_perms(n)
    for sigma in perms:
        gamma, left, right = perm.decompose_max(sigma)
        rebuilt = perm.compose(perm.direct_product(gamma, perm.identity(1)), perm.graft_perm(left, right))
        if rebuilt != sigma:
            problems.append('decompose_max does not rebuild {}'.format(sigma))
    hits = collections.Counter(
        perm.compose(perm.direct_product(gamma, perm.identity(1)), perm.graft_perm(left, right))
        for i in range(1, n + 1)
        for gamma in perm.shuffles(i - 1, n - i)
        for left in perm.enumerate_perms(i - 1)
        for right in perm.enumerate_perms(n - i))
    for sigma in perms:
        if hits[sigma] != 1:
            problems.append('{} has {} max-decompositions'.format(sigma, hits[sigma]))
    return problems


def _shuffle_interval_lemmas(n) -> List[str]:
    problems = []
    perms = perm.enumerate_perms(n)
    for p, q in _splits(n):
        sh, top = perm.shuffles(p, q), perm.xi(p, q)
        below = tuple(w for w in perms if perm.leq_weak(w, top))
        problems += _mismatch('Sh = [1, xi]', (p, q), sh, below)
        for sigma in perms:
            x, omega = perm.factorize_parabolic(sigma, p, q)
            if (perm.compose(x, omega) != sigma or x not in sh
                    or sorted(omega.word[:p]) != list(range(1, p + 1))
                    or perm.length(x) + perm.length(omega) != perm.length(sigma)):
                problems.append('bad parabolic factorization of {} for ({}, {})'.format(sigma, p, q))
    return problems


def _block_lemmas(n) -> List[str]:
    """Products and grafts of blocks of size at most 3."""
    problems = []
    for p, q in _splits(n):
        if p > 3 or q > 3:
            continue
        pairs = [(s, t) for s in perm.enumerate_perms(p) for t in perm.enumerate_perms(q)]
        for (s1, t1), (s2, t2) in itertools.product(pairs, repeat=2):
            if perm.leq_weak(s1, s2) and perm.leq_weak(t1, t2):
                if not perm.leq_weak(perm.direct_product(s1, t1), perm.direct_product(s2, t2)):
                    problems.append('direct product is not monotone on {} x {}, {} x {}'.format(s1, t1, s2, t2))
                if not perm.leq_weak(perm.graft_perm(s1, t1), perm.graft_perm(s2, t2)):
                    problems.append('grafting is not monotone on {}, {}'.format((s1, t1), (s2, t2)))
        steps = [perm.simple_transposition(k, n + 1) for k in range(p + q, p, -1)]
        for s, t in pairs:
            lhs = perm.graft_perm(s, t)
            rhs = perm.compose(perm.direct_product(perm.direct_product(s, t), perm.identity(1)),
                               perm.product_of(steps, n + 1))
            problems += _mismatch('graft as product', (s, t), lhs, rhs)
    return problems


def _translation_lemmas(n) -> List[str]:
    problems = []
    for p, q in _splits(n):
        sh = perm.shuffles(p, q)
        for s in perm.enumerate_perms(p):
            for t in perm.enumerate_perms(q):
                base = perm.direct_product(s, t)
                for w1, w2 in itertools.permutations(sh, 2):
                    if perm.leq_weak(w1, w2) and not perm.leq_weak(perm.compose(w1, base),
                                                                   perm.compose(w2, base)):
                        problems.append('shuffle translation breaks order at {}, {}'.format(w1, w2))
    return problems


def _xi_identity(n) -> List[str]:
    problems = []
    for p, q, r in _triples(n, lowest=0):
        lhs = perm.compose(perm.xi(p + q, r), perm.direct_product(perm.xi(p, q), perm.identity(r)))
        rhs = perm.compose(perm.xi(p, q + r), perm.direct_product(perm.identity(p), perm.xi(q, r)))
        problems += _mismatch('xi identity', (p, q, r), lhs, rhs)
    return problems


def _shuffle_associativity(n) -> List[str]:
    problems = []
    for p, q, r in _triples(n, lowest=0):
        left = {perm.compose(x, perm.direct_product(perm.identity(p), y))
                for x in perm.shuffles(p, q + r) for y in perm.shuffles(q, r)}
        right = {perm.compose(x, perm.direct_product(y, perm.identity(r)))
                 for x in perm.shuffles(p + q, r) for y in perm.shuffles(p, q)}
        if left != right:
            problems.append('shuffle associativity fails for ({}, {}, {})'.format(p, q, r))
    return problems


def _associativity_lemmas(n) -> List[str]:
    problems = []
    families = [
        (perm.enumerate_perms, (perm.over_perm, perm.under_perm)),
        (tree.enumerate_trees, (tree.over_tree, tree.under_tree)),
        (cube.enumerate_sign_vectors, (cube.over_cube, cube.under_cube)),
    ]
    for p, q, r in _triples(n, lowest=0):
        for enumerate_, operations in families:
            for a, b, c in itertools.product(enumerate_(p), enumerate_(q), enumerate_(r)):
                for op in operations:
                    problems += _mismatch(op.__name__ + ' associativity', (a, b, c),
                                          op(op(a, b), c), op(a, op(b, c)))
    return problems


def _rotation_lemmas(n) -> List[str]:
    problems = []
    tau_cycle = perm.product_of([perm.simple_transposition(k, n + 2) for k in range(n + 1, 0, -1)],
                                n + 2)
    for tau in perm.enumerate_perms(n):
        lhs = perm.compose(perm.direct_product(tau, perm.identity(2)), tau_cycle)
        rhs = perm.compose(tau_cycle, perm.direct_product(
            perm.direct_product(perm.identity(1), tau), perm.identity(1)))
        problems += _mismatch('cycle commutation', (tau,), lhs, rhs)
    for p, q in _splits(n):
        for u in tree.enumerate_trees(p):
            for v in tree.enumerate_trees(q):
                if not tree.leq_tree(tree.over_tree(u, v), tree.under_tree(u, v)):
                    problems.append('{} / {} is not below {} \\ {}'.format(u, v, u, v))
                if p and q:
                    pairs = [(tree.graft, cube.graft_cube), (tree.over_tree, cube.over_cube),
                             (tree.under_tree, cube.under_cube)]
                    for tree_op, cube_op in pairs:
                        problems += _mismatch('phi preserves ' + tree_op.__name__, (u, v),
                                              cube.phi(tree_op(u, v)),
                                              cube_op(cube.phi(u), cube.phi(v)))
        for a in cube.enumerate_sign_vectors(p):
            for b in cube.enumerate_sign_vectors(q):
                if not cube.leq_cube(cube.over_cube(a, b), cube.under_cube(a, b)):
                    problems.append('{} / {} is not below {} \\ {}'.format(a, b, a, b))
    return problems


# config key in the Lemmas section -> (cell label, check of one degree)
LEMMAS = {
    'weak_order': ('weak order on S_{}', _weak_order_lemmas),
    'max_decomposition': ('max-decompositions in S_{}', _max_decomposition_lemmas),
    'shuffle_interval': ('shuffles as an interval in degree {}', _shuffle_interval_lemmas),
    'blocks': ('products of small blocks in degree {}', _block_lemmas),
    'translation': ('shuffle translation in degree {}', _translation_lemmas),
    'xi_identity': ('xi identity in degree {}', _xi_identity),
    'shuffle_associativity': ('shuffle associativity in degree {}', _shuffle_associativity),
    'associativity': ('over/under associativity in degree {}', _associativity_lemmas),
    'rotations': ('grafting and rotations in degree {}', _rotation_lemmas),
}


@suite('lemmas')
def _lemmas(max_degree):
    """Each lemma runs up to its own configured degree, capped by ``max_degree``."""
    cells = []
    for key, (label, check) in LEMMAS.items():
        top = min(max_degree, CONF.get('Lemmas', key))
        cells += [(label.format(n), lambda n=n, check=check: check(n)) for n in range(top + 1)]
    return cells



# =============================================================================
# Orders and the maps between them
# =============================================================================

def _order_problems(n) -> List[str]:
    problems = []
    perms, trees, vertices = (perm.enumerate_perms(n), tree.enumerate_trees(n),
                              cube.enumerate_sign_vectors(n))
    rotation = nx.DiGraph()
    rotation.add_nodes_from(trees)
    rotation.add_edges_from((t, u) for t in trees for u in tree.up_covers_tree(t))
    if not nx.is_directed_acyclic_graph(rotation):
        problems.append('rotation graph of Y_{} has a cycle'.format(n))
    tree_closure = set(nx.transitive_closure(rotation, reflexive=True).edges)
    for t in trees:
        for w in trees:
            if tree.leq_tree(t, w) != ((t, w) in tree_closure):
                problems.append('leq_tree({}, {}) disagrees with the rotation closure'.format(t, w))

    perm_covers = [(a, b) for a in perms for b in perm.up_covers(a)]
    for a, b in perm_covers:
        if not tree.leq_tree(tree.psi(a), tree.psi(b)):
            problems.append('psi is not monotone on {} < {}'.format(a, b))
    induced = _closure_pairs(((tree.psi(a), tree.psi(b)) for a, b in perm_covers), trees)
    if induced != tree_closure:
        problems.append('order induced by psi differs from the rotation order on Y_{}'.format(n))

    if n == 0:
        return problems
    tree_covers = list(rotation.edges)
    for t, w in tree_covers:
        if not cube.leq_cube(cube.phi(t), cube.phi(w)):
            problems.append('phi is not monotone on {} < {}'.format(t, w))
    for t in trees:
        for w in trees:
            if (t, w) in tree_closure:
                for i, (a, b) in enumerate(zip(cube.phi(w).signs, cube.phi(t).signs)):
                    if a < 0 and b > 0:
                        problems.append('leaf {} of {} points right above {}'.format(i + 1, w, t))
    induced = _closure_pairs(((cube.phi(t), cube.phi(w)) for t, w in tree_covers), vertices)
    componentwise = {(a, b) for a in vertices for b in vertices if cube.leq_cube(a, b)}
    if induced != componentwise:
        problems.append('order induced by phi differs from the cube order on Q_{}'.format(n))
    return problems


@suite('orders')
def _orders(max_degree):
    return [('orders in grade {}'.format(n), lambda n=n: _order_problems(n))
            for n in range(max_degree + 1)]


# =============================================================================
# Counts and the worked example
# =============================================================================

@suite('counts')
def _counts(max_degree):
    def shuffles_check():
        problems = []
        for n in range(max_degree + 1):
            for p, q in _splits(n):
                if len(perm.shuffles(p, q)) != math.comb(n, p):
                    problems.append('|Sh({}, {})| = {}'.format(p, q, len(perm.shuffles(p, q))))
                if perm.length(perm.xi(p, q)) != p * q:
                    problems.append('l(xi({}, {})) != {}'.format(p, q, p * q))
        return problems

    def trees_check():
        problems = []
        for n in range(max_degree + 3):
            catalan = math.comb(2 * n, n) // (n + 1)
            if len(tree.enumerate_trees(n)) != catalan:
                problems.append('|Y_{}| != {}'.format(n, catalan))
        return problems

    def cube_check():
        return ['|Q_{}| != {}'.format(n, 2 ** (n - 1)) for n in range(1, max_degree + 1)
                if len(cube.enumerate_sign_vectors(n)) != 2 ** (n - 1)]

    return [('shuffle counts and lengths', shuffles_check),
            ('Catalan counts', trees_check),
            ('cube vertex counts', cube_check)]


@suite('example')
def _example(max_degree):
    def check():
        sigma = Permutation((3, 4, 1, 6, 2, 5))
        gamma, left, right = perm.decompose_max(sigma)
        problems = _mismatch('relabelled left part', (sigma,), left, Permutation((2, 3, 1)))
        problems += _mismatch('relabelled right part', (sigma,), right, Permutation((1, 2)))
        problems += _mismatch('rebuilt', (sigma,), perm.compose(
            perm.direct_product(gamma, perm.identity(1)), perm.graft_perm(left, right)), sigma)
        problems += _mismatch('psi', (sigma,), tree.psi(sigma),
                              tree.graft(tree.psi(left), tree.psi(right)))
        return problems
    return [('psi(3 4 1 6 2 5)', check)]

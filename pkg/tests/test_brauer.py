import itertools
import math
import random
from collections import defaultdict

import pytest

from conjdisj.brauer import (
    BinRel,
    EqRel,
    appropriate,
    choose_representatives,
    direct_image,
    exp_functor,
    f_ab_fun,
    f_ab_rel,
    f_p,
    graph,
    nth_prime,
    powerset_functor,
    rel_compose,
    respecting_functions,
    split_pairs,
    subset_code,
    subset_from_code,
)
from conjdisj.errors import LengthMismatch, NotAFunction, OutOfRange
from conjdisj.finfun import (
    FinFun,
    all_functions,
    codiag,
    compose,
    diag,
    identity,
    inj1,
    inj2,
    kappa,
    proj1,
    proj2,
)
from conjdisj.gen import (
    SplitEq,
    UnionFind,
    all_split_equivalences,
    j_of,
    se_compose,
    se_identity,
    set_partitions,
)

from oracles import f_ab_pairs, lex_tuples

NON_FUNCTION = SplitEq(3, 4, [[0, 3, 5, 6], [1], [2, 4]])
PROJ_SHAPED = j_of(FinFun(2, 3, [0, 1]))


def sieve(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for i in range(2, int(limit ** 0.5) + 1):
        if flags[i]:
            flags[i * i::i] = [False] * len(flags[i * i::i])
    return [i for i, ok in enumerate(flags) if ok]


def class_radices(classes, size, choices=(2, 3)):
    """Every radix vector on ``size`` positions that is constant on each class."""
    for values in itertools.product(choices, repeat=len(classes)):
        radix = [0] * size
        for c, v in zip(classes, values):
            for x in c:
                radix[x] = v
        yield radix


# -- primes --------------------------------------------------------------------

def test_nth_prime_examples():
    assert nth_prime(1) == 2
    assert nth_prime(4) == 7
    assert nth_prime(8) == 19


def test_nth_prime_against_sieve():
    assert [nth_prime(i) for i in range(1, 101)] == sieve(600)[:100]


def test_nth_prime_rejects_zero():
    with pytest.raises(OutOfRange):
        nth_prime(0)


# -- appropriateness -------------------------------------------------------------

def test_appropriate_examples():
    assert PROJ_SHAPED == SplitEq(3, 2, [[0, 3], [1, 4], [2]])
    assert appropriate((2, 3, 2), (2, 3), PROJ_SHAPED)
    assert not appropriate((3, 2, 2), (2, 2, 2, 2), NON_FUNCTION)
    singletons = SplitEq(2, 3, [[x] for x in range(5)])
    for a in itertools.product((2, 3, 5), repeat=2):
        for b in itertools.product((2, 3, 5), repeat=3):
            assert appropriate(a, b, singletons)


def test_appropriate_reads_target_radices_for_mixed_pairs():
    r = SplitEq(1, 1, [[0, 1]])
    assert appropriate((3,), (3,), r)
    assert not appropriate((3,), (2,), r)


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        appropriate((2,), (2,), NON_FUNCTION)
    with pytest.raises(LengthMismatch):
        f_ab_rel((2, 2, 2), (2,), NON_FUNCTION)


def test_radices_below_two_rejected():
    with pytest.raises(ValueError):
        f_ab_rel((1,), (2,), SplitEq(1, 1, [[0, 1]]))


# -- the representation ----------------------------------------------------------

def test_non_function_pairs():
    rel = f_ab_rel((3, 2, 2), (2, 2, 2, 2), NON_FUNCTION)
    assert (rel.src, rel.tgt) == (12, 16)
    assert rel.pairs == {(0, 0), (1, 4), (2, 0), (3, 4), (4, 11), (5, 15), (6, 11), (7, 15)}
    assert all(not rel.images(i) for i in range(8, 12))
    # the worked pair: (0,1,0) against (0,0,0,0)
    assert lex_tuples((3, 2, 2))[2] == (0, 1, 0)


def test_non_function_witness():
    with pytest.raises(NotAFunction) as info:
        f_ab_fun((3, 2, 2), (2, 2, 2, 2), NON_FUNCTION)
    assert (info.value.source, info.value.image_count) == (8, 0)
    assert "source 8 has no image" in str(info.value)


def test_example_first_projection():
    f = f_ab_fun((2, 3, 2), (2, 3), PROJ_SHAPED)
    assert f == FinFun(12, 6, [0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5])
    assert f == proj1(6, 2)


def test_example_diagonal():
    r = j_of(FinFun(4, 2, [0, 1, 0, 1]))
    assert r == SplitEq(2, 4, [[0, 2, 4], [1, 3, 5]])
    assert f_ab_rel((2, 2), (2, 2, 2, 2), r) == graph(FinFun(4, 16, [0, 5, 10, 15]))
    assert f_ab_fun((2, 2), (2, 2, 2, 2), r) == diag(4)


def test_empty_split_equivalence():
    assert f_ab_rel((), (), SplitEq(0, 0, [])) == BinRel(1, 1, [(0, 0)])


def test_f_p_examples():
    assert f_p(2, se_identity(1)) == graph(identity(2))
    assert f_p(2, SplitEq(1, 2, [[0, 1, 2]])) == BinRel(2, 4, [(0, 0), (1, 3)])
    full = BinRel(2, 2, itertools.product(range(2), repeat=2))
    assert f_p(2, SplitEq(1, 1, [[0], [1]])) == full


def test_with_one_class_restricted_to_the_smaller_radix():
    # position 0 has radix 3, position 1 radix 2: only values 0 and 1 fit both
    assert f_ab_rel((3,), (2,), SplitEq(1, 1, [[0, 1]])) == BinRel(3, 2, [(0, 0), (1, 1)])


@pytest.mark.parametrize("n,m", [(n, m) for n in range(4) for m in range(4) if n + m <= 4])
def test_f_ab_rel_matches_definition(n, m):
    for r in all_split_equivalences(n, m):
        for radix in itertools.product((2, 3), repeat=n + m):
            a, b = radix[:n], radix[n:]
            assert f_ab_rel(a, b, r).pairs == f_ab_pairs(a, b, r.classes)


def test_rel_compose_against_definition():
    r = BinRel(2, 3, [(0, 0), (0, 2), (1, 1)])
    s = BinRel(3, 2, [(0, 1), (2, 0), (2, 1)])
    expected = {(i, k) for i, j in r.pairs for j2, k in s.pairs if j == j2}
    assert rel_compose(s, r).pairs == expected == {(0, 1), (0, 0)}


# -- properties of the representation -------------------------------------------

@pytest.mark.parametrize("m,n", list(itertools.product(range(4), repeat=2)))
def test_images_of_functions_are_functions(m, n):
    for f in all_functions(m, n):
        r = j_of(f)
        for radix in class_radices(r.classes, r.size):
            a, b = radix[:r.src], radix[r.src:]
            assert appropriate(a, b, r)
            assert f_ab_rel(a, b, r).is_function()


def test_identity_preserved():
    for n in range(4):
        for a in itertools.product((2, 3), repeat=n):
            assert f_ab_rel(a, a, se_identity(n)) == graph(identity(math.prod(a)))


def _check_functoriality(r, s, rng=None):
    n, m, p = r.src, r.tgt, s.tgt
    uf = UnionFind(n + m + p)
    for c in r.classes:
        for x in c:
            uf.union(c[0], x)
    for c in s.classes:
        for x in c:
            uf.union(c[0] + n, x + n)
    joint = uf.classes()
    radices = list(class_radices(joint, n + m + p))
    if rng is not None:
        radices = [rng.choice(radices)]
    sr = se_compose(s, r)
    for radix in radices:
        a, b, c = radix[:n], radix[n:n + m], radix[n + m:]
        assert appropriate(a, b, r) and appropriate(b, c, s)
        lhs = rel_compose(f_ab_rel(b, c, s), f_ab_rel(a, b, r))
        assert lhs == f_ab_rel(a, c, sr)


@pytest.mark.parametrize("n,m,p", list(itertools.product(range(3), repeat=3)))
def test_composition_preserved_exhaustive_small(n, m, p):
    for r in all_split_equivalences(n, m):
        for s in all_split_equivalences(m, p):
            _check_functoriality(r, s)


def test_composition_preserved_sampled_up_to_three():
    rng = random.Random(11)
    parts = {(n, m): list(all_split_equivalences(n, m)) for n in range(4) for m in range(4)}
    for _ in range(300):
        n, m, p = (rng.randint(0, 3) for _ in range(3))
        _check_functoriality(rng.choice(parts[n, m]), rng.choice(parts[m, p]), rng)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(6) for m in range(6) if n + m <= 5])
def test_equal_representations_force_equal_f2(n, m):
    for radix in itertools.product((2, 3), repeat=n + m):
        a, b = radix[:n], radix[n:]
        groups = defaultdict(list)
        for r in all_split_equivalences(n, m):
            groups[f_ab_rel(a, b, r)].append(r)
        for members in groups.values():
            assert len({f_p(2, r) for r in members}) == 1


@pytest.mark.parametrize("n,m", [(n, m) for n in range(7) for m in range(7) if n + m <= 6])
def test_f2_is_injective(n, m):
    seen = {}
    for r in all_split_equivalences(n, m):
        key = f_p(2, r)
        assert key not in seen, f"{r} and {seen[key]} collide"
        seen[key] = r


@pytest.mark.parametrize("n,m", list(itertools.product(range(4), repeat=2)))
def test_projections_represented(n, m):
    for radix in itertools.product((2, 3), repeat=n + m):
        x, y = radix[:n], radix[n:]
        first = j_of(inj1(n, m))
        second = j_of(inj2(n, m))
        assert f_ab_fun(radix, x, first) == proj1(math.prod(x), math.prod(y))
        assert f_ab_fun(radix, y, second) == proj2(math.prod(x), math.prod(y))


@pytest.mark.parametrize("n", range(4))
def test_diagonal_represented(n):
    for x in itertools.product((2, 3), repeat=n):
        assert f_ab_fun(x, x + x, j_of(codiag(n))) == diag(math.prod(x))


# -- equivalence relations and function spaces ------------------------------------

def test_respecting_examples():
    assert respecting_functions(EqRel(2, [[0, 1]]), 2) == {0, 3}
    assert respecting_functions(EqRel.discrete(2), 2) == {0, 1, 2, 3}
    assert respecting_functions(EqRel(0, []), 3) == {0}


def _respects(r, p):
    """Codes of all functions X -> p satisfying the defining condition directly."""
    codes = set()
    for code, f in enumerate(lex_tuples([p] * r.size)):
        if all(f[x] == f[y] for x in range(r.size) for y in range(r.size) if r.related(x, y)):
            codes.add(code)
    return codes


@pytest.mark.parametrize("size", range(5))
def test_respecting_matches_definition(size):
    for classes in set_partitions(size):
        r = EqRel(size, classes)
        for p in (2, 3):
            assert respecting_functions(r, p) == _respects(r, p)


@pytest.mark.parametrize("size", range(5))
def test_respecting_separates_equivalences(size):
    seen = {}
    for classes in set_partitions(size):
        r = EqRel(size, classes)
        key = respecting_functions(r, 2)
        assert key not in seen
        seen[key] = r


def test_choose_representatives():
    c = choose_representatives(EqRel(4, [[0, 1], [2, 3]]))
    assert (c.reps, c.others, dict(c.phi)) == ((0, 2), (1, 3), {1: 0, 3: 2})
    c = choose_representatives(EqRel.discrete(3))
    assert c.others == () and not c.phi
    c = choose_representatives(EqRel(4, [[0, 1, 2, 3]]))
    assert c.reps == (0,) and set(c.phi.values()) == {0}
    assert c.phi_fun() == FinFun(3, 1, [0, 0, 0])


@pytest.mark.parametrize("size", range(6))
def test_split_pairs_equal_transport_by_phi(size):
    for classes in set_partitions(size):
        r = EqRel(size, classes)
        choice = choose_representatives(r)
        for p in (2, 3):
            # every pair (f1, f2), glued on X and tested against the condition
            expected = set()
            k1, k2 = len(choice.reps), len(choice.others)
            for c1, f1 in enumerate(lex_tuples([p] * k1)):
                for c2, f2 in enumerate(lex_tuples([p] * k2)):
                    f = dict(zip(choice.reps, f1)) | dict(zip(choice.others, f2))
                    if all(f[x] == f[y] for c in r.classes for x in c for y in c):
                        expected.add((c1, c2))
            assert split_pairs(r, p).pairs == expected
            assert split_pairs(r, p) == graph(exp_functor(p, choice.phi_fun()))


def test_exp_functor_examples():
    assert exp_functor(2, FinFun(1, 2, [0])) == FinFun(4, 2, [0, 0, 1, 1])
    for n in range(4):
        assert exp_functor(2, identity(n)) == identity(2 ** n)


@pytest.mark.parametrize("a,b,c", list(itertools.product(range(4), repeat=3)))
def test_exp_functor_is_contravariant(a, b, c):
    for p in (1, 2, 3):
        for f in all_functions(a, b):
            pf = exp_functor(p, f)
            for g in all_functions(b, c):
                assert exp_functor(p, compose(g, f)) == compose(pf, exp_functor(p, g))


def test_exp_functor_brute_force():
    f = FinFun(3, 2, [1, 0, 1])
    table = []
    for g in lex_tuples((3, 3)):
        table.append(lex_tuples((3, 3, 3)).index(tuple(g[x] for x in f.table)))
    assert exp_functor(3, f).table == tuple(table)


def test_powerset_examples():
    assert powerset_functor(FinFun(1, 2, [0])) == FinFun(4, 2, [0, 0, 1, 1])
    for n in range(4):
        assert powerset_functor(identity(n)) == identity(2 ** n)
        assert powerset_functor(kappa(n)) == FinFun(2 ** n, 1, [0] * 2 ** n)


def test_subset_codes():
    assert subset_code(3, {0}) == 4
    assert subset_from_code(3, 5) == {0, 2}
    with pytest.raises(OutOfRange):
        subset_from_code(2, 4)


@pytest.mark.parametrize("n,m", list(itertools.product(range(4), repeat=2)))
def test_exp_two_is_powerset(n, m):
    for f in all_functions(n, m):
        assert exp_functor(2, f).table == powerset_functor(f).table


def test_direct_image_examples():
    f = FinFun(2, 2, [0, 0])
    assert direct_image(f, subset_code(2, {0, 1})) == subset_code(2, {0})
    assert direct_image(f, 0) == 0
    for code in range(8):
        assert direct_image(identity(3), code) == code
    with pytest.raises(OutOfRange):
        direct_image(f, 4)


@pytest.mark.parametrize("n,m", list(itertools.product(range(4), repeat=2)))
def test_galois_connection(n, m):
    for f in all_functions(n, m):
        inverse = powerset_functor(f)
        for s in range(2 ** n):
            image = subset_from_code(m, direct_image(f, s))
            for y in range(2 ** m):
                left = image <= subset_from_code(m, y)
                right = subset_from_code(n, s) <= subset_from_code(n, inverse(y))
                assert left == right


def test_exponential_turns_sums_into_products():
    for p, n, m in itertools.product(range(1, 4), range(4), range(4)):
        f = identity(n + m)
        assert exp_functor(p, f).src == p ** (n + m) == exp_functor(p, identity(n)).src * exp_functor(p, identity(m)).src


def test_binrel_validation_and_round_trip():
    with pytest.raises(ValueError):
        BinRel(2, 2, [(2, 0)])
    rel = BinRel(2, 3, [(1, 2), (0, 0)])
    assert BinRel.from_dict(rel.to_dict()) == rel
    assert rel.to_dict() == {"src": 2, "tgt": 3, "pairs": [[0, 0], [1, 2]]}
    e = EqRel(3, [[2, 0], [1]])
    assert EqRel.from_dict(e.to_dict()) == e
    assert e.to_dict() == {"size": 3, "classes": [[0, 2], [1]]}

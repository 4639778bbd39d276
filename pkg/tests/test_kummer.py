import random

import pytest

from k3census import kummer as km
from k3census.kummer import exceptional, fiber_class, pair, transform


def test_exceptional_pairings():
    assert pair(exceptional(1, 1, 1, 1), exceptional(1, 1, 1, 1)) == -2
    assert pair(exceptional(1, 1, 1, 1), exceptional(1, 1, 1, -1)) == 0


def test_transform_pairings():
    assert pair(transform(2, 1, 1), transform(3, 1, 1)) == -1
    assert pair(transform(2, 1, 1), transform(3, -1, 1)) == 0
    assert pair(transform(2, 1, 1), transform(2, 1, -1)) == 0
    assert pair(transform(2, 1, 1), transform(2, 1, 1)) == -2
    # transform meets an exceptional sphere iff base and fiber signs agree
    assert pair(transform(2, 1, 1), exceptional(1, -1, 1, 1)) == 1
    assert pair(transform(2, 1, 1), exceptional(1, -1, -1, 1)) == 0
    assert pair(transform(2, 1, 1), exceptional(-1, -1, 1, 1)) == 0


def test_fiber_class_expansion_and_identities():
    t2 = fiber_class(2)
    want = transform(2, 1, 1).scaled(2) + exceptional(1, 1, 1, 1) + \
        exceptional(1, 1, 1, -1) + exceptional(1, -1, 1, 1) + exceptional(1, -1, 1, -1)
    assert t2 == want
    tori = [fiber_class(j) for j in (1, 2, 3)]
    for a in tori:
        for b in tori:
            assert pair(a, b) == 0


def test_pairing_symmetric_on_random_classes():
    rng = random.Random(8)
    gens = [exceptional(*[rng.choice((1, -1)) for _ in range(4)]) for _ in range(4)]
    gens += [transform(rng.randint(1, 3), rng.choice((1, -1)), rng.choice((1, -1)))
             for _ in range(4)]
    for _ in range(30):
        x = sum((g.scaled(rng.randint(-2, 2)) for g in gens), km.KummerClass({}))
        y = sum((g.scaled(rng.randint(-2, 2)) for g in gens), km.KummerClass({}))
        assert pair(x, y) == pair(y, x)
        assert isinstance(pair(x, y), int)


def test_verify_e8_bases():
    rep = km.verify_e8_bases()
    assert rep.gram_first == rep.gram_second
    assert rep.gram_first == tuple(map(tuple, km.minus_e8_matrix()))
    assert rep.cross_pairings_zero
    assert rep.torus_orthogonal
    assert rep.span_rank == 16 and rep.radical_is_torus_span


def test_sign_conventions_consistent():
    from k3census import e8
    neg = km.minus_e8_matrix()
    pos = e8.cartan_matrix()
    assert [[-x for x in row] for row in neg] == pos


def test_basic_classes():
    bcs = km.basic_classes((2, 3, 5))
    assert len(bcs) == 27
    canon = [b for b in bcs if b.is_canonical]
    assert len(canon) == 1 and canon[0].b == (1, 1, 1)
    zero = next(b for b in bcs if b.b == (0, 0, 0))
    assert zero.sw_coefficient == 1
    assert canon[0].pairing_with_dual(2) == 2 * 5
    with pytest.raises(ValueError):
        km.basic_classes((2, 4, 5))  # not pairwise coprime
    with pytest.raises(ValueError):
        km.basic_classes((1, 2, 3))


def test_rigidity():
    ok = km.rigidity_check((2, 3, 5), (2, 3, 5))
    assert ok.compatible and ok.assignment == ((0, 1), (1, 1), (2, 1))
    assert not km.rigidity_check((2, 3, 5), (2, 3, 7)).compatible
    assert not km.rigidity_check((2, 3, 5), (3, 4, 5)).compatible
    with pytest.raises(ValueError):
        km.rigidity_check((2, 3, 5), (3, 2, 5))

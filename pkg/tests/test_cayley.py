import random
import threading

import pytest

from scl.cayley import (
    DistanceOracle,
    bfs_distances,
    brute_force_isometric_cycles,
    canonical_cycle,
    enumerate_isometric_cycles,
    from_key,
    pack,
    parity_homomorphism,
    to_key,
    unpack,
)
from scl.errors import CapExceeded, NotNull, RadiusExhausted
from scl.families import VARIANTS, u_k, w_n
from scl.group import (
    IDENTITY,
    STD,
    TWISTED,
    apply_automorphism,
    custom_alphabet,
    evaluate,
    inverse,
    multiply,
    std_element,
)
from scl.words import Letter, Word, format_word, parse_word


def naive_ball(alphabet, radius):
    """Breadth-first search on NormalForms directly, sharing no code with the oracle."""
    gens = list(alphabet.images) + [inverse(g) for g in alphabet.images]
    dist = {IDENTITY: 0}
    frontier = [IDENTITY]
    for r in range(1, radius + 1):
        nxt = []
        for g in frontier:
            for s in gens:
                h = multiply(g, s)
                if h not in dist:
                    dist[h] = r
                    nxt.append(h)
        frontier = nxt
    return dist


def test_pack_round_trip():
    for f in [(), (1,), (-2, 1, 1), (2, -1, -1, 2)]:
        assert unpack(pack(f)) == f


def test_distance_examples(std_oracle, twisted_oracle):
    assert std_oracle.distance(IDENTITY, IDENTITY) == 0
    db = std_element("dB")
    assert naive_ball(STD, 2)[db] == 2
    assert std_oracle.distance(IDENTITY, db) == 2
    assert twisted_oracle.distance(IDENTITY, evaluate(parse_word("b3t2", TWISTED))) == 5


def test_fresh_oracle_matches_naive_bfs():
    for alph in (STD, TWISTED):
        ref = naive_ball(alph, 4)
        oracle = DistanceOracle(alph, radius_cap=2)
        for g, d in ref.items():
            assert oracle.distance(g) == d


def test_bidirectional_matches_unidirectional_radius_5():
    for alph in (STD, TWISTED):
        ref = bfs_distances(alph, 5)
        oracle = DistanceOracle(alph, radius_cap=3)
        assert all(oracle.distance_key(k) == d for k, d in ref.items())


def test_std_closed_form(std_oracle):
    std_oracle.grow_to(8)
    rng = random.Random(1)
    for key in rng.sample(sorted(std_oracle.ball_elements()), 1000):
        g = from_key(key)
        assert std_oracle.distance(g) == len(g.ab) + len(g.cd)


def test_metric_axioms(twisted_oracle):
    rng = random.Random(2)
    letters = [Letter(s, e) for s in range(4) for e in (1, -1)]
    pts = [evaluate(Word(tuple(rng.choice(letters) for _ in range(rng.randrange(6))), TWISTED))
           for _ in range(25)]
    d = {(i, j): twisted_oracle.distance(g, h) for i, g in enumerate(pts) for j, h in enumerate(pts)}
    for (i, j), v in d.items():
        assert v == d[j, i]
        assert (v == 0) == (pts[i] == pts[j])
    for i in range(len(pts)):
        for j in range(len(pts)):
            for k in range(len(pts)):
                assert d[i, k] <= d[i, j] + d[j, k]


def test_automorphisms_are_isometries(twisted_oracle):
    rng = random.Random(3)
    for _ in range(200):
        w = Word(tuple(Letter(rng.randrange(4), rng.choice((1, -1)))
                       for _ in range(rng.randrange(1, 13))), TWISTED)
        d = twisted_oracle.distance(evaluate(w))
        assert twisted_oracle.distance(evaluate(apply_automorphism("phi", w))) == d
        assert twisted_oracle.distance(evaluate(apply_automorphism("psi", w))) == d


@pytest.mark.parametrize("m", range(-4, 5))
@pytest.mark.parametrize("l", range(-4, 5))
def test_bt_subgroup_is_l1(twisted_oracle, m, l):
    w = parse_word(("b" if m > 0 else "B") * abs(m) + ("t" if l > 0 else "T") * abs(l), TWISTED)
    assert twisted_oracle.distance(evaluate(w)) == abs(m) + abs(l)


def test_radius_exhausted():
    oracle = DistanceOracle(STD, radius_cap=2)
    assert oracle.distance(std_element("abcd")) == 4
    with pytest.raises(RadiusExhausted):
        oracle.distance(std_element("abcda"))


def test_max_states_guardrail():
    oracle = DistanceOracle(TWISTED, radius_cap=8, max_states=1000)
    with pytest.raises(RadiusExhausted):
        oracle.grow_to(5)
    # the ball is left consistent at the last complete radius
    assert oracle.ball_radius == 3
    assert oracle.ball_size == sum(r[1] for r in oracle.ball_profile(3))


def test_witness_examples(std_oracle, twisted_oracle):
    assert len(std_oracle.geodesic_witness(IDENTITY)) == 0
    assert format_word(std_oracle.geodesic_witness(std_element("a"))) == "a"
    v = twisted_oracle.geodesic_witness(evaluate(u_k(3, 1)))
    assert len(v) == 8
    text = format_word(v)
    assert evaluate(v) == evaluate(u_k(3, 1))
    assert sum(x.symbol == 0 and x.sign > 0 for x in v) == 1
    assert sum(x.symbol == 2 and x.sign > 0 for x in v) == 1
    assert "A" not in text and "C" not in text


@pytest.mark.parametrize("n", range(5))
def test_witnesses_use_a_and_c_once(twisted_oracle, n):
    for k in range(n + 1):
        v = twisted_oracle.geodesic_witness(evaluate(u_k(n, k)))
        assert len(v) == 2 * n + 2
        a_letters = [x for x in v if x.symbol == 0]
        c_letters = [x for x in v if x.symbol == 2]
        assert [x.sign for x in a_letters] == [1]
        assert [x.sign for x in c_letters] == [1]


def test_witness_independent_of_ball_state():
    g = evaluate(u_k(3, 1))
    small = DistanceOracle(TWISTED, radius_cap=4).geodesic_witness(g)
    grown = DistanceOracle(TWISTED, radius_cap=8)
    grown.grow_to(8)
    assert grown.geodesic_witness(g) == small


def test_is_geodesic_examples(std_oracle, twisted_oracle):
    assert not std_oracle.is_geodesic(parse_word("aA", STD))
    assert std_oracle.is_geodesic(parse_word("ab", STD))
    assert std_oracle.is_geodesic(parse_word("", STD))


@pytest.mark.parametrize("n", range(6))
def test_u_family_geodesic(twisted_oracle, n):
    for k in range(n + 1):
        for v in VARIANTS:
            u = u_k(n, k, v)
            assert len(u) == 2 * n + 2
            assert twisted_oracle.is_geodesic(u)


def test_same_words_not_geodesic_over_std_rewrite():
    # over std, t = dB costs two letters, so u_k rewritten is longer than its element
    oracle = DistanceOracle(STD)
    w = parse_word("dBcbDa", STD)
    assert not oracle.is_geodesic(w)


def test_isometric_cycle_examples(std_oracle, twisted_oracle):
    assert std_oracle.is_isometric_cycle(parse_word("acAC", STD)).is_isometric
    assert twisted_oracle.is_isometric_cycle(parse_word("t2cT2at2CT2A", TWISTED)).is_isometric
    r = std_oracle.is_isometric_cycle(parse_word("aAcC", STD))
    assert not r.is_isometric and r.violation == (0, 2, 2, 0)
    with pytest.raises(NotNull):
        std_oracle.is_isometric_cycle(parse_word("ab", STD))


def test_acac_against_brute_force_pairs():
    w = parse_word("acAC", STD)
    ref = naive_ball(STD, 2)
    verts = [IDENTITY]
    for x in w:
        verts.append(multiply(verts[-1], STD.letter_image(x)))
    for i in range(4):
        for j in range(i + 1, 4):
            assert ref[multiply(inverse(verts[i]), verts[j])] == min(j - i, 4 - (j - i))


def test_std_loops_are_not_isometric_when_long(std_oracle):
    w = parse_word("a2c2A2C2", STD)
    r = std_oracle.is_isometric_cycle(w)
    assert not r.is_isometric


@pytest.mark.parametrize("n", range(5))
def test_w_n_isometric(twisted_oracle, n):
    assert twisted_oracle.is_isometric_cycle(w_n(n)).is_isometric


def test_canonical_cycle():
    assert format_word(canonical_cycle(w_n(1))) == "atcTAtCT"
    w = parse_word("cACa", STD)
    assert format_word(canonical_cycle(w)) == "acAC"


def test_enumerate_examples(std_oracle, twisted_oracle):
    assert enumerate_isometric_cycles(std_oracle, 3) == []
    std8 = enumerate_isometric_cycles(std_oracle, 8)
    assert std8 and {len(w) for w in std8} == {4}
    tw8 = enumerate_isometric_cycles(twisted_oracle, 8)
    assert canonical_cycle(w_n(1)) in tw8
    assert all(twisted_oracle.is_isometric_cycle(w).is_isometric for w in tw8)


@pytest.mark.parametrize("alph", [STD, TWISTED], ids=["std", "twisted"])
def test_enumeration_matches_brute_force(alph):
    pruned = enumerate_isometric_cycles(DistanceOracle(alph), 6)
    brute = brute_force_isometric_cycles(DistanceOracle(alph), 6)
    assert pruned == brute


def test_enumeration_parallel_matches_serial():
    serial = enumerate_isometric_cycles(DistanceOracle(TWISTED), 8)
    parallel = enumerate_isometric_cycles(DistanceOracle(TWISTED), 8, workers=3)
    assert serial == parallel


def test_enumeration_caps(std_oracle):
    with pytest.raises(CapExceeded):
        enumerate_isometric_cycles(std_oracle, 18)
    with pytest.raises(RadiusExhausted):
        enumerate_isometric_cycles(DistanceOracle(STD, radius_cap=2), 8)


def test_parity():
    assert parity_homomorphism(STD) is not None
    assert parity_homomorphism(TWISTED) is not None
    odd = custom_alphabet("a=a,b=b,e=ab")
    assert parity_homomorphism(odd) is None


def test_odd_cycles_found_without_parity():
    odd = custom_alphabet("a=a,b=b,e=ab")
    cycles = enumerate_isometric_cycles(DistanceOracle(odd), 3)
    assert [format_word(w) for w in cycles] == ["abE"]


def test_ball_profile(std_oracle, twisted_oracle):
    assert [r[1] for r in std_oracle.ball_profile(1)] == [1, 8]
    free = [1, 4, 12, 36, 108, 324, 972]
    rows = std_oracle.ball_profile(6)
    for r, sphere, ball in rows:
        assert sphere == sum(free[i] * free[r - i] for i in range(r + 1))
    assert rows[2] == (2, 40, 49)
    assert twisted_oracle.ball_profile(1)[1][1] == 8
    naive = naive_ball(TWISTED, 4)
    assert twisted_oracle.ball_profile(4)[-1][2] == len(naive)
    with pytest.raises(CapExceeded):
        DistanceOracle(STD, radius_cap=3).ball_profile(4)


def test_concurrent_queries_agree():
    oracle = DistanceOracle(TWISTED, radius_cap=6)
    rng = random.Random(7)
    targets = [evaluate(Word(tuple(Letter(rng.randrange(4), rng.choice((1, -1)))
                                   for _ in range(10)), TWISTED)) for _ in range(40)]
    expected = [DistanceOracle(TWISTED, radius_cap=6).distance(g) for g in targets]
    results = [None] * len(targets)

    def work(lo):
        for i in range(lo, len(targets), 4):
            results[i] = oracle.distance(targets[i])

    threads = [threading.Thread(target=work, args=(i,)) for i in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == expected


def test_to_key_round_trip():
    g = std_element("abAcdD")
    assert from_key(to_key(g)) == g

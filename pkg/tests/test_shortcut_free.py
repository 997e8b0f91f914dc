import random

import pytest

from scl.errors import NotNull
from scl.group import STD
from scl.shortcut_free import (
    best_split_value,
    cancellation_tree,
    centroid,
    decompose,
    sharpness_word,
    split_null_word,
)
from scl.words import cyclic_conjugate, format_word, free_reduce, parse_word, random_null_word


def W(text):
    return parse_word(text, STD)


def lifo_pairs(text):
    # independent matching oracle on raw characters
    stack, pairs = [], []
    for i, ch in enumerate(text):
        if stack and text[stack[-1]] != ch and text[stack[-1]].lower() == ch.lower():
            pairs.append((stack.pop(), i))
        else:
            stack.append(i)
    return sorted(pairs), stack


def test_tree_single_edge():
    t = cancellation_tree(W("aA"))
    assert t.n_vertices == 2 and t.n_edges == 1
    assert t.walk == ((1, 1), (1, -1))


def test_tree_star():
    pairs, rest = lifo_pairs("aAaA")
    assert pairs == [(0, 1), (2, 3)] and not rest
    t = cancellation_tree(W("aAaA"))
    assert t.n_vertices == 3
    assert t.parent == (-1, 0, 0)


def test_tree_rejects_non_null():
    with pytest.raises(NotNull):
        cancellation_tree(W("ab"))


def test_tree_walk_reads_word():
    for seed in range(200):
        u = random_null_word(2 * (seed % 80), 1.0, seed)
        t = cancellation_tree(u)
        assert tuple(t.read_walk()) == u.letters
        assert t.n_edges == len(u) // 2
        # every edge traversed exactly once in each direction
        seen = sorted(t.walk)
        assert seen == sorted([(v, 1) for v in range(1, t.n_vertices)]
                              + [(v, -1) for v in range(1, t.n_vertices)])
        # each matched pair from the independent oracle is one edge
        expanded = "".join(u.char(i) for i in range(len(u)))
        pairs, rest = lifo_pairs(expanded)
        assert not rest
        for i, j in pairs:
            assert t.walk[i][0] == t.walk[j][0]


def test_centroid_examples():
    path = cancellation_tree(W("abBA"))  # 0 - 1 - 2
    assert centroid(path) == 1
    star = cancellation_tree(W("aAbBaAbB"))
    assert centroid(star) == 0
    pair = cancellation_tree(W("aA"))
    assert centroid(pair) == 0


def test_centroid_bound():
    for seed in range(300):
        u = random_null_word(2 * (1 + seed % 100), 1.0, seed)
        t = cancellation_tree(u)
        c = centroid(t)
        assert all(2 * comp <= t.n_vertices for comp in t.components_without(c))


def test_split_degenerate():
    assert split_null_word(W("aA")) == (0, W("aA"), W(""))
    assert split_null_word(W("")) == (0, W(""), W(""))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_sharpness(m):
    u = sharpness_word(m, STD)
    assert len(u) == 6 * m
    assert best_split_value(u) == 2 * m
    rotation, u1, u2 = split_null_word(u)
    assert min(len(u1), len(u2)) == 2 * m


def test_sharpness_examples_text():
    assert format_word(sharpness_word(1, STD)) == "aA2abB"
    assert sharpness_word(2, STD) == W("a2A4a2b2B2")
    rotation, u1, u2 = split_null_word(W("aAAabB"))
    assert min(len(u1), len(u2)) == 2


def test_best_split_brute_force_tiny():
    assert best_split_value(W("aAbB")) == 2
    assert best_split_value(W("abBA")) == 2
    assert best_split_value(W("aA")) == 0


def test_split_random_words():
    rng = random.Random(0)
    for _ in range(1000):
        length = rng.randrange(2, 401, 2)
        u = random_null_word(length, 1.0, rng.getrandbits(64))
        s = decompose(u)
        assert cyclic_conjugate(u, s.rotation) == s.u1 + s.u2
        assert not free_reduce(s.u1).letters and not free_reduce(s.u2).letters
        assert len(s.u1) + len(s.u2) == length
        assert min(len(s.u1), len(s.u2)) >= length // 3
        assert all(p <= length // 2 + 1 for p in s.pieces)
        assert sum(s.pieces) == length


def test_split_never_beats_brute_force():
    rng = random.Random(4)
    for _ in range(60):
        length = rng.randrange(2, 21, 2)
        u = random_null_word(length, 1.0, rng.getrandbits(64))
        _, u1, u2 = split_null_word(u)
        best = best_split_value(u)
        assert length // 3 <= min(len(u1), len(u2)) <= best


def test_dot_output():
    t = cancellation_tree(W("aAbB"))
    dot = t.to_dot(highlight=centroid(t))
    assert dot.startswith("digraph")
    assert dot.count("->") == 2
    assert "gold" in dot

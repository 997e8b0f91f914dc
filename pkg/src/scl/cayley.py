"""Exact word-metric computations in Cay(G, A).

Group elements are packed as a pair of ints, one per free factor: each
reduced factor word is a base-5 numeral with digits 1..4 (a, A, b, B or
c, C, d, D) and its last letter in the lowest digit, so right
multiplication by a letter is one ``divmod``.

Distances come from a bidirectional breadth-first search. The ball around
the identity is kept between queries and only ever grows; by left
invariance d(g, h) = d(1, g^-1 h), so every query reuses it.
"""
from __future__ import annotations

import itertools
import os
import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import CapExceeded, NotNull, RadiusExhausted
from .group import IDENTITY, MarkedAlphabet, NormalForm, inverse, multiply, reduce_factor
from .words import Letter, Word

Key = tuple[int, int]

DEFAULT_RADIUS_CAP = 8
DEFAULT_ENUM_CAP = 16
DEFAULT_MAX_STATES = 20_000_000

# digit <-> signed factor letter
_CODE = {1: 1, -1: 2, 2: 3, -2: 4}
_LETTER = {v: k for k, v in _CODE.items()}
_INV = (0, 2, 1, 4, 3)


def pack(factor: Iterable[int]) -> int:
    p = 0
    for x in factor:
        p = p * 5 + _CODE[x]
    return p


def unpack(p: int) -> tuple[int, ...]:
    out = []
    while p:
        p, r = divmod(p, 5)
        out.append(_LETTER[r])
    return tuple(reversed(out))


def to_key(g: NormalForm) -> Key:
    return (pack(g.ab), pack(g.cd))


def from_key(key: Key) -> NormalForm:
    return NormalForm(unpack(key[0]), unpack(key[1]))


def _rmul(p: int, codes: tuple[int, ...]) -> int:
    for c in codes:
        q, r = divmod(p, 5)
        p = q if r == _INV[c] else p * 5 + c
    return p


def default_radius_cap() -> int:
    env = os.environ.get("SCL_RADIUS_CAP")
    return int(env) if env else DEFAULT_RADIUS_CAP


def parity_homomorphism(alphabet: MarkedAlphabet) -> Optional[tuple[int, int, int, int]]:
    """A map G -> Z/2 sending every generator to 1, if one exists.

    Homomorphisms G -> Z/2 are the assignments of 0/1 to a, b, c, d; returns
    the first assignment (as a tuple) under which every generator image has
    odd exponent sum, or None. When it exists every null word has even length.
    """
    sums = []
    for img in alphabet.images:
        counts = [0, 0, 0, 0]
        for x in img.ab:
            counts[abs(x) - 1] += 1
        for x in img.cd:
            counts[abs(x) + 1] += 1
        sums.append(counts)
    for chi in itertools.product((0, 1), repeat=4):
        if all(sum(c * v for c, v in zip(counts, chi)) % 2 == 1 for counts in sums):
            return chi
    return None


@dataclass(frozen=True)
class CycleReport:
    word: Word
    is_isometric: bool
    violation: Optional[tuple[int, int, int, int]] = None  # (i, j, expected, actual)


@dataclass
class _Search:
    distance: Optional[int]
    meet: Optional[Key]
    backward: dict


class DistanceOracle:
    """Exact distances in Cay(G, A) with a persistent ball around the identity.

    ``radius_cap`` bounds the radius of both search balls, so distances up to
    ``2 * radius_cap`` are answered; beyond that RadiusExhausted is raised.
    Ball growth is serialized by an internal lock; lookups against an
    already-grown ball need no coordination.
    """

    def __init__(
        self,
        alphabet: MarkedAlphabet,
        radius_cap: Optional[int] = None,
        max_states: int = DEFAULT_MAX_STATES,
    ):
        self.alphabet = alphabet
        self.radius_cap = default_radius_cap() if radius_cap is None else radius_cap
        self.max_states = max_states
        # one move per letter, ordered by (symbol, positive first)
        self.letters: list[Letter] = []
        self.moves: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        for sym, img in enumerate(alphabet.images):
            for sign in (1, -1):
                g = img if sign > 0 else inverse(img)
                self.letters.append(Letter(sym, sign))
                self.moves.append((tuple(_CODE[x] for x in g.ab), tuple(_CODE[x] for x in g.cd)))
        self._inverse_move = [i ^ 1 for i in range(len(self.moves))]
        self._ball: dict[Key, int] = {(0, 0): 0}
        self._frontier: list[Key] = [(0, 0)]
        self._sphere_sizes: list[int] = [1]
        self._lock = threading.Lock()
        self.parity = parity_homomorphism(alphabet)

    # -- element plumbing -------------------------------------------------

    def step(self, key: Key, move: int) -> Key:
        ab, cd = self.moves[move]
        return (_rmul(key[0], ab) if ab else key[0], _rmul(key[1], cd) if cd else key[1])

    def move_index(self, letter: Letter) -> int:
        return 2 * letter.symbol + (0 if letter.sign > 0 else 1)

    def word_key(self, w: Word, start: Key = (0, 0)) -> Key:
        key = start
        for letter in w.letters:
            key = self.step(key, self.move_index(letter))
        return key

    def neighbours(self, key: Key) -> list[Key]:
        p, q = key
        out = []
        for ab, cd in self.moves:
            out.append((_rmul(p, ab) if ab else p, _rmul(q, cd) if cd else q))
        return out

    # -- the persistent ball ----------------------------------------------

    @property
    def ball_radius(self) -> int:
        return len(self._sphere_sizes) - 1

    @property
    def ball_size(self) -> int:
        return len(self._ball)

    def grow_to(self, radius: int) -> None:
        if radius > self.radius_cap:
            raise RadiusExhausted(f"radius {radius} exceeds radius cap {self.radius_cap}")
        with self._lock:
            while self.ball_radius < radius:
                self._grow_once()

    def _grow_once(self) -> None:
        ball = self._ball
        r = self.ball_radius + 1
        new: list[Key] = []
        moves = self.moves
        for p, q in self._frontier:
            for ab, cd in moves:
                nxt = (_rmul(p, ab) if ab else p, _rmul(q, cd) if cd else q)
                if nxt not in ball:
                    ball[nxt] = r
                    new.append(nxt)
        if len(ball) > self.max_states:
            for key in new:
                del ball[key]
            raise RadiusExhausted(
                f"ball of radius {r} holds {len(ball)} states, above max_states={self.max_states}"
            )
        self._frontier = new
        self._sphere_sizes.append(len(new))

    def ball_elements(self) -> list[Key]:
        return list(self._ball)

    def lookup(self, key: Key) -> Optional[int]:
        """Distance from the identity if ``key`` lies in the current ball."""
        return self._ball.get(key)

    # -- queries ----------------------------------------------------------

    def _search(self, target: Key, limit: Optional[int] = None) -> _Search:
        """Bidirectional search from the identity to ``target``.

        With ``limit`` set, stops as soon as d > limit is certain and reports
        distance None. The answer is exact once the best meeting value is at
        most (ball radius + backward radius): any shorter path would cross
        both balls and would already have been seen.
        """
        ball = self._ball
        backward = {target: 0}
        frontier = [target]
        rb = 0
        best = ball.get(target)
        meet = target if best is not None else None
        while True:
            rf = self.ball_radius
            if best is not None and best <= rf + rb:
                return _Search(best, meet, backward)
            if limit is not None and rf + rb >= limit:
                return _Search(None, None, backward)
            if rf < self.radius_cap and rf <= rb:
                self.grow_to(rf + 1)
                for x, db in backward.items():
                    df = ball.get(x)
                    if df is not None and (best is None or df + db < best):
                        best, meet = df + db, x
            elif rb < self.radius_cap:
                rb += 1
                new = []
                for key in frontier:
                    for nxt in self.neighbours(key):
                        if nxt not in backward:
                            backward[nxt] = rb
                            new.append(nxt)
                            df = ball.get(nxt)
                            if df is not None and (best is None or df + rb < best):
                                best, meet = df + rb, nxt
                frontier = new
            else:
                raise RadiusExhausted(
                    f"distance exceeds {2 * self.radius_cap} (radius cap {self.radius_cap})"
                )

    def distance_key(self, key: Key) -> int:
        return self._search(key).distance

    def within(self, key: Key, limit: int) -> Optional[int]:
        """Exact distance from the identity if it is at most ``limit``, else None."""
        d = self.lookup(key)
        if d is not None:
            return d if d <= limit else None
        if limit <= self.ball_radius:
            return None
        return self._search(key, limit).distance

    def distance(self, g: NormalForm, h: NormalForm = None) -> int:
        """Word-metric distance d(g, h); with one argument, d(1, g)."""
        target = g if h is None else multiply(inverse(g), h)
        return self.distance_key(to_key(target))

    def geodesic_witness(self, g: NormalForm) -> Word:
        """The least geodesic word for ``g`` in letter order.

        Built greedily: from the current vertex take the smallest letter that
        lowers the distance to ``g``. The result does not depend on how far
        the ball has grown.
        """
        remaining = self.distance(g)
        cur = IDENTITY
        letters = []
        while remaining:
            for mv, letter in enumerate(self.letters):
                nxt = multiply(cur, self.alphabet.letter_image(letter))
                key = to_key(multiply(inverse(nxt), g))
                if self.within(key, remaining - 1) is not None:
                    letters.append(letter)
                    cur, remaining = nxt, remaining - 1
                    break
        return Word(tuple(letters), self.alphabet)

    def is_geodesic(self, w: Word) -> bool:
        key = self.word_key(w)
        # d <= |w| always; geodesic iff nothing shorter exists
        return self.within(key, len(w) - 1) is None if len(w) else True

    def prefix_keys(self, w: Word) -> list[Key]:
        keys = [(0, 0)]
        for letter in w.letters:
            keys.append(self.step(keys[-1], self.move_index(letter)))
        return keys

    def is_isometric_cycle(self, w: Word) -> CycleReport:
        """Check d(g_i, g_j) = min(j - i, |w| - (j - i)) for all prefix vertices.

        Reports the first violating pair in (i, j) order.
        """
        n = len(w)
        if n == 0 or self.word_key(w) != (0, 0):
            raise NotNull(f"{w} does not represent the identity")
        idx = [self.move_index(x) for x in w.letters]
        for i in range(n):
            key = (0, 0)
            for j in range(i + 1, n):
                key = self.step(key, idx[j - 1])
                expected = min(j - i, n - (j - i))
                if self.within(key, expected - 1) is not None:
                    actual = self.distance_key(key)
                    return CycleReport(w, False, (i, j, expected, actual))
        return CycleReport(w, True, None)

    def ball_profile(self, radius: int) -> list[tuple[int, int, int]]:
        """Rows (r, sphere size, ball size) for r = 0..radius."""
        if radius > self.radius_cap:
            raise CapExceeded(f"radius {radius} exceeds radius cap {self.radius_cap}")
        self.grow_to(radius)
        rows, total = [], 0
        for r in range(radius + 1):
            total += self._sphere_sizes[r]
            rows.append((r, self._sphere_sizes[r], total))
        return rows


# -- distance without the bidirectional machinery (test oracle) -------------


def bfs_distances(alphabet: MarkedAlphabet, radius: int) -> dict[Key, int]:
    """Plain breadth-first search from the identity to ``radius``."""
    oracle = DistanceOracle(alphabet, radius_cap=0)
    dist = {(0, 0): 0}
    frontier = [(0, 0)]
    for r in range(1, radius + 1):
        new = []
        for key in frontier:
            for nxt in oracle.neighbours(key):
                if nxt not in dist:
                    dist[nxt] = r
                    new.append(nxt)
        frontier = new
    return dist


# -- cycles -----------------------------------------------------------------


def canonical_cycle(w: Word) -> Word:
    """Least word, in letter order, among all rotations of w and of its inverse."""
    letters = w.letters
    inv = tuple(x.inverse() for x in reversed(letters))
    n = len(letters)
    best = None
    for seq in (letters, inv):
        for i in range(max(n, 1)):
            rot = seq[i:] + seq[:i]
            key = tuple(x.sort_key() for x in rot)
            if best is None or key < best[0]:
                best = (key, rot)
    return Word(best[1], w.alphabet)


def _enumerate_length(oracle: DistanceOracle, length: int, first_moves: list[int]) -> set:
    """Canonical isometric cycles of one length whose first letter is in ``first_moves``.

    Only words that use no letter smaller than their first letter are
    explored; the canonical representative of every cycle is such a word.
    """
    found = set()
    nmoves = len(oracle.moves)
    ball = oracle._ball
    step = oracle.step

    def expected(gap: int) -> int:
        return gap if gap <= length - gap else length - gap

    for first in first_moves:
        # rel[i] = g_i^-1 g_m for the current prefix of length m
        stack = [(1, [step((0, 0), first)], [first])]
        while stack:
            m, rel, word = stack.pop()
            for mv in range(nmoves - 1, first - 1, -1):
                new_rel = [step(h, mv) for h in rel]
                if m + 1 == length:
                    if new_rel[0] == (0, 0):
                        letters = tuple(oracle.letters[x] for x in word + [mv])
                        found.add(canonical_cycle(Word(letters, oracle.alphabet)).letters)
                    continue
                new_rel.append(step((0, 0), mv))
                # vertex m+1 against every earlier vertex i
                top = m + 1
                if all(ball.get(h) == expected(top - i) for i, h in enumerate(new_rel)):
                    stack.append((top, new_rel, word + [mv]))
    return found


def _worker(args):
    alphabet, radius_cap, length, first_moves = args
    oracle = DistanceOracle(alphabet, radius_cap=radius_cap)
    oracle.grow_to(length // 2)
    return _enumerate_length(oracle, length, first_moves)


def enumerate_isometric_cycles(
    oracle: DistanceOracle,
    max_length: int,
    enum_cap: int = DEFAULT_ENUM_CAP,
    workers: int = 1,
) -> list[Word]:
    """Canonical forms of all isometric cycles of length 3..max_length.

    Sorted by (length, letter order). Odd lengths are skipped when the
    alphabet admits the parity homomorphism.
    """
    if max_length > enum_cap:
        raise CapExceeded(f"max_length {max_length} exceeds enumeration cap {enum_cap}")
    if max_length // 2 > oracle.radius_cap:
        raise RadiusExhausted(f"max_length {max_length} needs radius {max_length // 2}")
    oracle.grow_to(max_length // 2)
    lengths = [
        L for L in range(3, max_length + 1) if oracle.parity is None or L % 2 == 0
    ]
    found: set = set()
    nmoves = len(oracle.moves)
    if workers > 1:
        jobs = [(oracle.alphabet, oracle.radius_cap, L, [mv]) for L in lengths for mv in range(nmoves)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_worker, jobs):
                found |= part
    else:
        for L in lengths:
            found |= _enumerate_length(oracle, L, list(range(nmoves)))
    words = [Word(letters, oracle.alphabet) for letters in found]
    words.sort(key=lambda w: (len(w), w.sort_key()))
    return words


def brute_force_isometric_cycles(oracle: DistanceOracle, max_length: int) -> list[Word]:
    """Unpruned reference: test every word of length 3..max_length."""
    found = set()
    alph = oracle.alphabet
    for L in range(3, max_length + 1):
        for combo in itertools.product(oracle.letters, repeat=L):
            w = Word(tuple(combo), alph)
            if oracle.word_key(w) != (0, 0):
                continue
            if oracle.is_isometric_cycle(w).is_isometric:
                found.add(canonical_cycle(w).letters)
    words = [Word(letters, alph) for letters in found]
    words.sort(key=lambda w: (len(w), w.sort_key()))
    return words


__all__ = [
    "CycleReport",
    "DistanceOracle",
    "IDENTITY",
    "bfs_distances",
    "brute_force_isometric_cycles",
    "canonical_cycle",
    "enumerate_isometric_cycles",
    "from_key",
    "pack",
    "parity_homomorphism",
    "to_key",
    "unpack",
    "reduce_factor",
]

"""Letters, words and the compact text grammar.

A word is written as a run of generator characters: lowercase is the
generator, uppercase its inverse, and an optional decimal count repeats
the preceding letter, so ``"t5cT5a"`` is t^5 c t^-5 a.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Iterator, NamedTuple

from .errors import IndexOutOfRange, MalformedCount, OddLength, UnknownGenerator

if TYPE_CHECKING:
    from .group import MarkedAlphabet


class Letter(NamedTuple):
    symbol: int  # index into the alphabet's declared symbols
    sign: int  # +1 or -1

    def inverse(self) -> "Letter":
        return Letter(self.symbol, -self.sign)

    def sort_key(self) -> tuple[int, int]:
        # declaration order, positive before negative
        return (self.symbol, 0 if self.sign > 0 else 1)


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...]
    alphabet: "MarkedAlphabet"

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item], self.alphabet)
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if other.alphabet != self.alphabet:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.letters + other.letters, self.alphabet)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r}, {self.alphabet.name})"

    def char(self, i: int) -> str:
        """Single-character rendering of letter ``i``."""
        return letter_char(self.letters[i], self.alphabet)

    def sort_key(self) -> tuple:
        return tuple(x.sort_key() for x in self.letters)


def letter_char(letter: Letter, alphabet: "MarkedAlphabet") -> str:
    ch = alphabet.symbols[letter.symbol]
    return ch if letter.sign > 0 else ch.upper()


def make_word(letters: Iterable[Letter], alphabet: "MarkedAlphabet") -> Word:
    return Word(tuple(letters), alphabet)


_TOKEN = re.compile(r"([A-Za-z])(\d*)")


def parse_word(text: str, alphabet: "MarkedAlphabet") -> Word:
    """Parse the compact grammar into a :class:`Word` over ``alphabet``.

    Raises UnknownGenerator for characters the alphabet does not declare and
    MalformedCount for a zero count or a count with no letter in front.
    """
    compact = "".join(text.split())
    if compact in ("", "1"):
        return Word((), alphabet)
    index = {ch: i for i, ch in enumerate(alphabet.symbols)}
    letters: list[Letter] = []
    pos = 0
    while pos < len(compact):
        m = _TOKEN.match(compact, pos)
        if m is None:
            ch = compact[pos]
            if ch.isdigit():
                raise MalformedCount(f"count without a letter at offset {pos} in {text!r}")
            raise UnknownGenerator(f"unexpected character {ch!r} in {text!r}")
        ch, count = m.group(1), m.group(2)
        sym = index.get(ch.lower())
        if sym is None:
            raise UnknownGenerator(
                f"generator {ch.lower()!r} is not declared in alphabet {alphabet.name!r}"
            )
        reps = int(count) if count else 1
        if reps < 1:
            raise MalformedCount(f"repeat count must be >= 1, got {count!r}")
        letters.extend([Letter(sym, 1 if ch.islower() else -1)] * reps)
        pos = m.end()
    return Word(tuple(letters), alphabet)


def format_word(w: Word) -> str:
    """Run-length text for ``w``; the inverse of :func:`parse_word`."""
    out = []
    letters = w.letters
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        out.append(letter_char(letters[i], w.alphabet))
        if j - i >= 2:
            out.append(str(j - i))
        i = j
    return "".join(out)


def free_reduce(w: Word) -> Word:
    """Freely reduce, treating every symbol of the alphabet as a free generator."""
    stack: list[Letter] = []
    for x in w.letters:
        if stack and stack[-1].symbol == x.symbol and stack[-1].sign == -x.sign:
            stack.pop()
        else:
            stack.append(x)
    return Word(tuple(stack), w.alphabet)


def cyclic_conjugate(w: Word, i: int) -> Word:
    if not 0 <= i <= len(w):
        raise IndexOutOfRange(f"rotation {i} outside 0..{len(w)}")
    return Word(w.letters[i:] + w.letters[:i], w.alphabet)


def invert_word(w: Word) -> Word:
    return Word(tuple(x.inverse() for x in reversed(w.letters)), w.alphabet)


def random_dyck(n: int, rng: random.Random) -> list[int]:
    """Uniform random Dyck path with ``n`` up-steps, as a list of +1/-1.

    Shuffles n up-steps and n+1 down-steps, rotates to the unique cyclic
    shift whose proper prefixes stay nonnegative, then drops the final step.
    """
    steps = [1] * n + [-1] * (n + 1)
    rng.shuffle(steps)
    level, lowest, cut = 0, 0, 0
    for i, s in enumerate(steps):
        level += s
        if level < lowest:
            lowest, cut = level, i + 1
    rotated = steps[cut:] + steps[:cut]
    return rotated[:-1]


def _factor_null_word(pairs: int, symbols: tuple[int, int], rng: random.Random) -> list[Letter]:
    out: list[Letter] = []
    opened: list[Letter] = []
    for step in random_dyck(pairs, rng):
        if step > 0:
            x = Letter(rng.choice(symbols), rng.choice((1, -1)))
            opened.append(x)
            out.append(x)
        else:
            out.append(opened.pop().inverse())
    return out


def random_null_word(target_length: int, factor_bias: float = 0.5, seed: int = 0) -> Word:
    """Random word over {a,b,c,d} of exact length representing the identity.

    Each factor word is read off a uniformly random non-crossing matching
    whose pairs get a random generator and orientation; the two factor words
    are then shuffled together. The result is not uniform over null words.
    """
    from .group import STD

    if target_length < 0 or target_length % 2:
        raise OddLength(f"null words have even length, got {target_length}")
    if not 0.0 <= factor_bias <= 1.0:
        raise ValueError("factor_bias must lie in [0, 1]")
    rng = random.Random(seed)
    half = target_length // 2
    p = sum(rng.random() < factor_bias for _ in range(half))
    ab = _factor_null_word(p, (0, 1), rng)
    cd = _factor_null_word(half - p, (2, 3), rng)
    labels = [0] * len(ab) + [1] * len(cd)
    rng.shuffle(labels)
    ab_it, cd_it = iter(ab), iter(cd)
    return Word(tuple(next(cd_it) if lab else next(ab_it) for lab in labels), STD)

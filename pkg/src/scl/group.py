"""The group G = F(a,b) x F(c,d): normal forms, marked alphabets, evaluation."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidAlphabet, UnknownGenerator
from .words import Letter, Word, parse_word

# Factor letters are nonzero ints: +1/+2 are a/b (or c/d), negatives are inverses.
FactorWord = tuple[int, ...]

_AB = "ab"
_CD = "cd"


def reduce_factor(letters: Iterable[int]) -> FactorWord:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def invert_factor(p: FactorWord) -> FactorWord:
    return tuple(-x for x in reversed(p))


def _factor_text(p: FactorWord, names: str) -> str:
    return "".join(names[abs(x) - 1] if x > 0 else names[abs(x) - 1].upper() for x in p)


@dataclass(frozen=True)
class NormalForm:
    """An element of G as a pair of freely reduced factor words."""

    ab: FactorWord = ()
    cd: FactorWord = ()

    def __post_init__(self):
        if reduce_factor(self.ab) != self.ab or reduce_factor(self.cd) != self.cd:
            raise ValueError("NormalForm parts must be freely reduced")
        if any(abs(x) not in (1, 2) for x in self.ab + self.cd):
            raise ValueError("factor letters must be +-1 or +-2")

    @property
    def is_identity(self) -> bool:
        return not self.ab and not self.cd

    @property
    def length(self) -> int:
        """Word length over {a,b,c,d}: the sum of the reduced factor lengths."""
        return len(self.ab) + len(self.cd)

    def std_text(self) -> str:
        """The element written over {a,b,c,d}, ab-part first; ``"1"`` for the identity."""
        text = _factor_text(self.ab, _AB) + _factor_text(self.cd, _CD)
        return text or "1"

    def __str__(self) -> str:
        return self.std_text()


IDENTITY = NormalForm()


def multiply(g: NormalForm, h: NormalForm) -> NormalForm:
    return NormalForm(reduce_factor(g.ab + h.ab), reduce_factor(g.cd + h.cd))


def inverse(g: NormalForm) -> NormalForm:
    return NormalForm(invert_factor(g.ab), invert_factor(g.cd))


@dataclass(frozen=True)
class MarkedAlphabet:
    """A finite generating set of G: single-letter symbols and their images."""

    name: str
    symbols: tuple[str, ...]
    images: tuple[NormalForm, ...]

    def __post_init__(self):
        if len(self.symbols) != len(self.images):
            raise InvalidAlphabet("symbols and images differ in length")
        if len(set(self.symbols)) != len(self.symbols):
            raise InvalidAlphabet(f"duplicate symbols in {self.symbols}")
        for s, img in zip(self.symbols, self.images):
            if len(s) != 1 or not s.isalpha() or not s.islower():
                raise InvalidAlphabet(f"symbol {s!r} must be a single lowercase letter")
            if img.is_identity:
                raise InvalidAlphabet(f"generator {s!r} maps to the identity")

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise UnknownGenerator(f"{symbol!r} not declared in alphabet {self.name!r}") from None

    def letter_image(self, letter: Letter) -> NormalForm:
        img = self.images[letter.symbol]
        return img if letter.sign > 0 else inverse(img)

    def word(self, text: str) -> Word:
        return parse_word(text, self)


def std_element(text: str) -> NormalForm:
    """Parse a word over {a,b,c,d} straight to its element."""
    ab, cd = [], []
    for letter in parse_word(text, STD):
        sym = letter.symbol
        (ab if sym < 2 else cd).append((sym % 2 + 1) * letter.sign)
    return NormalForm(reduce_factor(ab), reduce_factor(cd))


STD = MarkedAlphabet(
    "std",
    ("a", "b", "c", "d"),
    (NormalForm((1,), ()), NormalForm((2,), ()), NormalForm((), (1,)), NormalForm((), (2,))),
)

# t = d b^-1, whose normal form is (b^-1, d) because the factors commute
TWISTED = MarkedAlphabet(
    "twisted",
    ("a", "b", "c", "t"),
    (NormalForm((1,), ()), NormalForm((2,), ()), NormalForm((), (1,)), NormalForm((-2,), (2,))),
)

BUILTIN_ALPHABETS = {"std": STD, "twisted": TWISTED}


def custom_alphabet(spec: str, name: str = "custom") -> MarkedAlphabet:
    """Build an alphabet from ``"sym=word_over_std,..."``, e.g. ``"a=a,b=b,c=c,t=dB"``."""
    symbols, images = [], []
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        sym, sep, rhs = item.partition("=")
        if not sep:
            raise InvalidAlphabet(f"generator spec {item!r} is not of the form sym=word")
        symbols.append(sym.strip())
        images.append(std_element(rhs))
    if not symbols:
        raise InvalidAlphabet("empty generator list")
    return MarkedAlphabet(name, tuple(symbols), tuple(images))


def get_alphabet(name: str) -> MarkedAlphabet:
    try:
        return BUILTIN_ALPHABETS[name]
    except KeyError:
        raise InvalidAlphabet(f"unknown alphabet {name!r}; use std, twisted or --gen") from None


def evaluate(w: Word, alphabet: MarkedAlphabet | None = None) -> NormalForm:
    """Evaluate ``w`` in G. Factors are accumulated independently."""
    alphabet = alphabet or w.alphabet
    if alphabet is not w.alphabet and alphabet.symbols != w.alphabet.symbols:
        raise UnknownGenerator(
            f"word over {w.alphabet.name!r} cannot be evaluated over {alphabet.name!r}"
        )
    ab: list[int] = []
    cd: list[int] = []
    images = alphabet.images
    for letter in w.letters:
        img = images[letter.symbol]
        if letter.sign > 0:
            ab.extend(img.ab)
            cd.extend(img.cd)
        else:
            ab.extend(invert_factor(img.ab))
            cd.extend(invert_factor(img.cd))
    return NormalForm(reduce_factor(ab), reduce_factor(cd))


def apply_automorphism(which: str, w: Word) -> Word:
    """Letter-wise image of ``w`` under phi (a -> a^-1) or psi (c -> c^-1).

    Both fix every other generator of the twisted alphabet.
    """
    if which not in ("phi", "psi"):
        raise ValueError(f"unknown automorphism {which!r}")
    if w.alphabet.symbols != TWISTED.symbols:
        raise UnknownGenerator("automorphisms phi and psi act on words over the twisted alphabet")
    flipped = w.alphabet.index("a" if which == "phi" else "c")
    return Word(
        tuple(Letter(x.symbol, -x.sign) if x.symbol == flipped else x for x in w.letters),
        w.alphabet,
    )


def flip_element(which: str, g: NormalForm) -> NormalForm:
    """The action of phi/psi on elements: invert every a (resp. c) letter of the normal form."""
    if which == "phi":
        return NormalForm(tuple(-x if abs(x) == 1 else x for x in g.ab), g.cd)
    if which == "psi":
        return NormalForm(g.ab, tuple(-x if abs(x) == 1 else x for x in g.cd))
    raise ValueError(f"unknown automorphism {which!r}")


def check_relators(alphabet: MarkedAlphabet, relators: Sequence[Word | str]) -> list[bool]:
    out = []
    for r in relators:
        w = parse_word(r, alphabet) if isinstance(r, str) else r
        out.append(evaluate(w, alphabet).is_identity)
    return out


# [a,c], [a,tb], [b,c], [b,t] with [x,y] = x y x^-1 y^-1
TWISTED_RELATORS = ("acAC", "atbABT", "bcBC", "btBT")

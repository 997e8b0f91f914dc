"""Shortcut certificates for loops in Cay(G, {a,b,c,d}).

Project the loop w onto whichever free factor holds at least half its
letters, split that projection u with :func:`split_null_word`, and take the
shorter of the two arcs of w spanned by the pieces u1, u2. Dropping the
piece's letters from the arc gives a shorter word mu for the same element.

Why the constants hold, with l = |w| and u_i the chosen piece:

* |u| >= l/2, so |u_i| >= floor(|u|/3) >= floor(l/6);
* the arcs of u1 and u2 are disjoint, so the chosen arc w1 has |w1| <= l/2;
* |mu| = |w1| - |u_i|.

Hence loop1 = |w1| + |mu| <= l - floor(l/6) and loop2 = |mu| + |w2| =
l - |u_i| <= l - floor(l/6). For l >= 42, floor(l/6) >= l/7, which gives
(1 - 6/7) l <= |w1| <= |w2| and |mu| <= (6/7) |w1|.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import NotNull
from .group import STD, evaluate
from .shortcut_free import split_null_word
from .words import Word, cyclic_conjugate, format_word, parse_word

LAMBDA = Fraction(6, 7)
RATIO_THRESHOLD = 42
LOOP_BOUND_THRESHOLD = 24

_FACTOR_SYMBOLS = {"ab": (0, 1), "cd": (2, 3)}


@dataclass(frozen=True)
class ShortcutCertificate:
    rotation: int
    split: int
    w1: Word
    w2: Word
    mu: Word
    factor: str  # "ab" or "cd"
    deleted_positions: tuple[int, ...]
    loop1_length: int
    loop2_length: int

    FIELDS = ("rotation", "split", "w1", "w2", "mu", "factor", "loop1", "loop2")

    def to_json(self) -> str:
        record = {
            "rotation": self.rotation,
            "split": self.split,
            "w1": format_word(self.w1),
            "w2": format_word(self.w2),
            "mu": format_word(self.mu),
            "factor": self.factor,
            "loop1": self.loop1_length,
            "loop2": self.loop2_length,
        }
        return json.dumps(record, separators=(", ", ": "))

    @classmethod
    def from_json(cls, text: str) -> "ShortcutCertificate":
        rec = json.loads(text)
        w1 = parse_word(rec["w1"], STD)
        keep = _FACTOR_SYMBOLS.get(rec["factor"], ())
        deleted = tuple(i for i, x in enumerate(w1.letters) if x.symbol in keep)
        return cls(
            rotation=int(rec["rotation"]),
            split=int(rec["split"]),
            w1=w1,
            w2=parse_word(rec["w2"], STD),
            mu=parse_word(rec["mu"], STD),
            factor=rec["factor"],
            deleted_positions=deleted,
            loop1_length=int(rec["loop1"]),
            loop2_length=int(rec["loop2"]),
        )


def shortcut(w: Word) -> ShortcutCertificate:
    """Build a certificate subdividing the loop ``w`` (a null word over std)."""
    if w.alphabet.symbols != STD.symbols:
        raise ValueError("shortcut certificates are built for words over {a,b,c,d} only")
    n = len(w)
    if n < 2 or not evaluate(w, STD).is_identity:
        raise NotNull(f"{w} is not a null word of length >= 2")
    n_ab = sum(1 for x in w.letters if x.symbol < 2)
    factor = "ab" if 2 * n_ab >= n else "cd"
    keep = _FACTOR_SYMBOLS[factor]
    positions = [i for i, x in enumerate(w.letters) if x.symbol in keep]
    u = Word(tuple(w.letters[i] for i in positions), STD)
    rotation, u1, u2 = split_null_word(u)
    m = len(u)

    arcs = []
    for offset, piece in ((0, u1), (len(u1), u2)):
        if not len(piece):
            continue
        first = positions[(rotation + offset) % m]
        last = positions[(rotation + offset + len(piece) - 1) % m]
        arcs.append((first, (last - first) % n + 1))
    # shorter arc wins; ties keep u1 (min is stable)
    start, length = min(arcs, key=lambda arc: arc[1])

    rotated = cyclic_conjugate(w, start)
    w1, w2 = rotated[:length], rotated[length:]
    deleted = tuple(i for i, x in enumerate(w1.letters) if x.symbol in keep)
    mu = Word(tuple(x for x in w1.letters if x.symbol not in keep), STD)
    return ShortcutCertificate(
        rotation=start,
        split=length,
        w1=w1,
        w2=w2,
        mu=mu,
        factor=factor,
        deleted_positions=deleted,
        loop1_length=len(w1) + len(mu),
        loop2_length=len(mu) + len(w2),
    )


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(w: Word, cert: ShortcutCertificate) -> CertificateCheck:
    """Independently re-check a certificate against the loop ``w``.

    Reason codes: ``not-null``, ``rotation-mismatch``, ``split-mismatch``,
    ``element-mismatch``, ``deletion-mismatch``, ``loop-length-mismatch``,
    ``loop-bound``, ``ratio-bound``.
    """
    n = len(w)
    if not evaluate(w, STD).is_identity:
        return CertificateCheck(False, "not-null")
    if not 0 <= cert.rotation <= n:
        return CertificateCheck(False, "rotation-mismatch")
    if cyclic_conjugate(w, cert.rotation) != cert.w1 + cert.w2:
        return CertificateCheck(False, "rotation-mismatch")
    if cert.split != len(cert.w1):
        return CertificateCheck(False, "split-mismatch")
    if evaluate(cert.mu, STD) != evaluate(cert.w1, STD):
        return CertificateCheck(False, "element-mismatch")
    drop = set(cert.deleted_positions)
    kept = tuple(x for i, x in enumerate(cert.w1.letters) if i not in drop)
    if kept != cert.mu.letters:
        return CertificateCheck(False, "deletion-mismatch")
    if (
        cert.loop1_length != len(cert.w1) + len(cert.mu)
        or cert.loop2_length != len(cert.mu) + len(cert.w2)
    ):
        return CertificateCheck(False, "loop-length-mismatch")
    if n >= LOOP_BOUND_THRESHOLD:
        bound = n - n // 6
        if cert.loop1_length > bound or cert.loop2_length > bound:
            return CertificateCheck(False, "loop-bound")
    if n >= RATIO_THRESHOLD:
        w1, w2, mu = len(cert.w1), len(cert.w2), len(cert.mu)
        if not ((1 - LAMBDA) * n <= w1 <= w2 and mu <= LAMBDA * w1):
            return CertificateCheck(False, "ratio-bound")
    return CertificateCheck(True)

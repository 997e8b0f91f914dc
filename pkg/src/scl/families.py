"""The explicit loops w_n and their half-length windows, over the twisted alphabet."""
from __future__ import annotations

from dataclasses import dataclass

from .cayley import DistanceOracle
from .errors import InvalidSpec
from .group import STD, TWISTED, apply_automorphism, evaluate, std_element
from .words import Word, cyclic_conjugate, invert_word, parse_word

VARIANTS = ("plain", "prime", "dprime", "tprime")


def _power(ch: str, e: int) -> str:
    if e == 0:
        return ""
    return (ch if e > 0 else ch.upper()) + (str(abs(e)) if abs(e) > 1 else "")


def _t(e: int) -> str:
    return _power("t", e)


def w_n(n: int) -> Word:
    """t^n c t^-n a t^n c^-1 t^-n a^-1, the commutator of t^n c t^-n with a."""
    if n < 0:
        raise InvalidSpec("n must be nonnegative")
    return parse_word(f"{_t(n)}c{_t(-n)}a{_t(n)}C{_t(-n)}A", TWISTED)


def w_n_over_std(n: int) -> Word:
    """The same loop rewritten with t^n c t^-n = d^n c d^-n."""
    d = f"{_power('d', n)}c{_power('d', -n)}"
    return parse_word(f"{d}a{_power('d', n)}C{_power('d', -n)}A", STD)


@dataclass(frozen=True)
class FamilySpec:
    n: int
    k: int
    variant: str = "plain"

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise InvalidSpec(f"need 0 <= k <= n, got n={self.n}, k={self.k}")
        if self.variant not in VARIANTS:
            raise InvalidSpec(f"variant must be one of {VARIANTS}, got {self.variant!r}")


def u_family(spec: FamilySpec) -> Word:
    n, k = spec.n, spec.k
    text = {
        "plain": f"{_t(n - k)}c{_t(-n)}a{_t(k)}",
        "prime": f"{_t(-(n - k))}a{_t(n)}C{_t(-k)}",
        "dprime": f"{_t(n - k)}C{_t(-n)}A{_t(k)}",
        "tprime": f"{_t(-(n - k))}A{_t(n)}c{_t(-k)}",
    }[spec.variant]
    return parse_word(text, TWISTED)


def u_k(n: int, k: int, variant: str = "plain") -> Word:
    return u_family(FamilySpec(n, k, variant))


def claim_identity_failures(n: int) -> list[str]:
    """Every failed identity among the phi/psi relations between the u-words, as text."""
    bad = []
    w = w_n(n)
    rotations = {cyclic_conjugate(w, i) for i in range(len(w))}
    for k in range(n + 1):
        u = u_k(n, k)
        if u_k(n, n - k, "prime") != apply_automorphism("phi", invert_word(u)):
            bad.append(f"u'_{n - k} != phi(u_{k}^-1)")
        if u_k(n, k, "dprime") != apply_automorphism("phi", apply_automorphism("psi", u)):
            bad.append(f"u''_{k} != phi(psi(u_{k}))")
        if u_k(n, n - k, "tprime") != apply_automorphism("psi", invert_word(u)):
            bad.append(f"u'''_{n - k} != psi(u_{k}^-1)")
        if u + u_k(n, k, "dprime") not in rotations:
            bad.append(f"u_{k} u''_{k} is not a cyclic conjugate of w_{n}")
    return bad


def verify_claim_identities(n: int) -> bool:
    return not claim_identity_failures(n)


def half_windows(n: int) -> list[Word]:
    """All length-(2n+2) cyclic subwords of w_n."""
    w = w_n(n)
    half = 2 * n + 2
    return [cyclic_conjugate(w, i)[:half] for i in range(len(w))]


def null_by_both_routes(n: int) -> bool:
    return evaluate(w_n(n)).is_identity and evaluate(w_n_over_std(n)).is_identity


def z2_distance_table(bound: int, oracle: DistanceOracle) -> list[tuple[int, int, int, int]]:
    """Rows (m, l, |m| + |l|, d(1, b^m t^l)) for |m|, |l| <= bound."""
    if oracle.alphabet.symbols != TWISTED.symbols:
        raise ValueError("the b,t table needs an oracle over the twisted alphabet")
    rows = []
    for m in range(-bound, bound + 1):
        for l in range(-bound, bound + 1):
            g = evaluate(parse_word(_power("b", m) + _t(l), TWISTED))
            rows.append((m, l, abs(m) + abs(l), oracle.distance(g)))
    return rows


def t_power_conjugate_matches(n: int) -> bool:
    """t^n c t^-n and d^n c d^-n are the same element."""
    lhs = evaluate(parse_word(f"{_t(n)}c{_t(-n)}", TWISTED))
    return lhs == std_element("d" * n + "c" + "D" * n)

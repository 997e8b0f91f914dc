"""Splitting null words of a free group into two null cyclic pieces.

A null word u is read around a planar tree (its cancellation tree). Cutting
the tree at a centroid and re-grouping the excursions around it yields a
cyclic conjugate u1 u2 of u with both pieces null and
min(|u1|, |u2|) >= floor(|u| / 3).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotNull
from .words import Letter, Word, cyclic_conjugate, format_word, free_reduce, parse_word


@dataclass(frozen=True)
class CancellationTree:
    """Planar tree whose boundary walk from vertex 0 spells ``word``.

    Vertices are numbered in creation order, so parents precede children.
    ``label[v]`` is the letter read when walking from ``parent[v]`` to ``v``.
    ``walk[i]`` is ``(v, +1)`` when letter i walks out along the edge into v
    and ``(v, -1)`` when it walks back; ``at[i]`` is the vertex before letter i.
    """

    word: Word
    parent: tuple[int, ...]
    label: tuple[Letter | None, ...]
    walk: tuple[tuple[int, int], ...]
    at: tuple[int, ...]
    base: int = 0

    @property
    def n_vertices(self) -> int:
        return len(self.parent)

    @property
    def n_edges(self) -> int:
        return len(self.parent) - 1

    def children(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.parent]
        for v in range(1, len(self.parent)):
            out[self.parent[v]].append(v)
        return out

    def subtree_sizes(self) -> list[int]:
        size = [1] * len(self.parent)
        for v in range(len(self.parent) - 1, 0, -1):
            size[self.parent[v]] += size[v]
        return size

    def components_without(self, v: int) -> list[int]:
        """Sizes of the components left after deleting vertex ``v``."""
        size = self.subtree_sizes()
        comps = [size[c] for c in self.children()[v]]
        if v != self.base:
            comps.append(self.n_vertices - size[v])
        return comps

    def read_walk(self) -> list[Letter]:
        out = []
        for v, direction in self.walk:
            out.append(self.label[v] if direction > 0 else self.label[v].inverse())
        return out

    def to_dot(self, highlight: int | None = None) -> str:
        alph = self.word.alphabet
        lines = ["digraph cancellation_tree {"]
        for v in range(self.n_vertices):
            attrs = ' style=filled fillcolor="gold"' if v == highlight else ""
            lines.append(f'  v{v} [label="{v}"{attrs}];')
        for v in range(1, self.n_vertices):
            x = self.label[v]
            # edges point along the positive direction of their generator
            src, dst = (self.parent[v], v) if x.sign > 0 else (v, self.parent[v])
            lines.append(f'  v{src} -> v{dst} [label="{alph.symbols[x.symbol]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def cancellation_tree(u: Word) -> CancellationTree:
    parent = [-1]
    label: list[Letter | None] = [None]
    walk: list[tuple[int, int]] = []
    at: list[int] = []
    cur = 0
    for x in u.letters:
        at.append(cur)
        top = label[cur]
        if cur != 0 and top.symbol == x.symbol and top.sign == -x.sign:
            walk.append((cur, -1))
            cur = parent[cur]
        else:
            v = len(parent)
            parent.append(cur)
            label.append(x)
            walk.append((v, 1))
            cur = v
    if cur != 0:
        raise NotNull(f"{u} is not null in the free group on its letters")
    return CancellationTree(u, tuple(parent), tuple(label), tuple(walk), tuple(at))


def centroid(tree: CancellationTree) -> int:
    """Vertex minimizing (largest remaining component, index); its components have <= N/2 vertices."""
    n = tree.n_vertices
    size = tree.subtree_sizes()
    worst = [n - size[v] if v != tree.base else 0 for v in range(n)]
    for v in range(1, n):
        p = tree.parent[v]
        worst[p] = max(worst[p], size[v])
    return min(range(n), key=lambda v: (worst[v], v))


@dataclass(frozen=True)
class Split:
    rotation: int
    u1: Word
    u2: Word
    centroid: int
    pieces: tuple[int, ...]  # lengths of the excursions around the centroid, in walk order

    def __iter__(self):
        return iter((self.rotation, self.u1, self.u2))


def decompose(u: Word) -> Split:
    """Split ``u`` around the centroid of its cancellation tree.

    The excursions w_1 .. w_k around the centroid are merged down to three
    pieces (merge the first two while they fit in half of u, otherwise fold
    the tail into w_3); the longest of the three becomes u1 and the other two,
    in cyclic order, u2.
    """
    tree = cancellation_tree(u)
    n = len(u)
    empty = u[:0]
    if n == 0:
        return Split(0, empty, empty, 0, ())
    c = centroid(tree)
    start = tree.at.index(c)
    offsets = [i for i in range(n) if tree.at[(start + i) % n] == c]
    lengths = [b - a for a, b in zip(offsets, offsets[1:] + [n])]
    excursions = tuple(lengths)
    pieces = [(a, l) for a, l in zip(offsets, lengths)]
    if n >= 4 and len(pieces) < 2:
        raise AssertionError(f"centroid {c} of a tree with {tree.n_vertices} vertices is a leaf")
    if len(pieces) == 1:
        return Split(start, u, empty, c, excursions)
    rotated = cyclic_conjugate(u, start)
    if len(pieces) == 2:
        cut = pieces[1][0]
        return Split(start, rotated[:cut], rotated[cut:], c, excursions)
    while len(pieces) > 3:
        (a0, l0), (_, l1) = pieces[0], pieces[1]
        if 2 * (l0 + l1) <= n:
            pieces[:2] = [(a0, l0 + l1)]
        else:
            tail = pieces[2:]
            pieces[2:] = [(tail[0][0], sum(l for _, l in tail))]
            break
    longest = max(range(3), key=lambda i: (pieces[i][1], -i))
    a, l = pieces[longest]
    rotation = (start + a) % n
    w = cyclic_conjugate(u, rotation)
    return Split(rotation, w[:l], w[l:], c, excursions)


def split_null_word(u: Word) -> tuple[int, Word, Word]:
    """Return (rotation, u1, u2) with cyclic_conjugate(u, rotation) == u1 + u2.

    Both pieces are null and min(|u1|, |u2|) >= floor(|u| / 3).
    """
    s = decompose(u)
    return s.rotation, s.u1, s.u2


def best_split_value(u: Word) -> int:
    """Largest min(|u1|, |u2|) over all cyclic splits into two null pieces, by exhaustion."""
    n = len(u)
    best = 0
    for r in range(max(n, 1)):
        w = cyclic_conjugate(u, r)
        for s in range(1, n):
            if min(s, n - s) > best and not free_reduce(w[:s]).letters and not free_reduce(w[s:]).letters:
                best = min(s, n - s)
    return best


def sharpness_word(m: int, alphabet) -> Word:
    """a^m a^-m a^-m a^m b^m b^-m, for which floor(|u|/3) is the best possible split."""
    a, b = alphabet.symbols[0], alphabet.symbols[1]
    text = f"{a}{m}{a.upper()}{m}{a.upper()}{m}{a}{m}{b}{m}{b.upper()}{m}"
    return parse_word(text, alphabet)


def format_split(split: Split) -> str:
    u1 = format_word(split.u1) or "1"
    u2 = format_word(split.u2) or "1"
    return f"rotation={split.rotation} u1={u1} u2={u2}"

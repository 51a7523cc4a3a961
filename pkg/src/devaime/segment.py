"""Splitting roman input into phoneme codes.

Two views of the same problem: ``build_lattice`` collects *every* way a
substring can match a code (many-to-many, including lexicon-only
alternates) so lexicon matching can honor variant spellings, while
``greedy_tokenize`` produces the single deterministic maximal-munch
segmentation used for direct mapping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartable import CharacterTable, PhonemeEntry, fold_case
from .errors import NoSegmentation


@dataclass(frozen=True)
class Arc:
    """One code match: input[start:end] is a spelling of ``entry``."""

    start: int
    end: int
    entry: PhonemeEntry


@dataclass(frozen=True)
class TokenLattice:
    """All code matches over a (case-folded) roman string."""

    input: str
    arcs: frozenset[Arc]


@dataclass(frozen=True)
class Tokenization:
    """A contiguous path of arcs covering the whole input."""

    path: tuple[Arc, ...]

    def entries(self) -> tuple[PhonemeEntry, ...]:
        return tuple(a.entry for a in self.path)

    def codes(self, text: str) -> tuple[str, ...]:
        return tuple(text[a.start:a.end] for a in self.path)


def build_lattice(table: CharacterTable, text: str) -> TokenLattice:
    """Every arc (i, j, entry) where text[i:j] is one of entry's codes."""
    text = fold_case(text)
    arcs = set()
    n = len(text)
    for i in range(n):
        for j in range(i + 1, min(i + table.max_code_len, n) + 1):
            for entry in table.code_index.get(text[i:j], ()):
                arcs.add(Arc(i, j, entry))
    return TokenLattice(input=text, arcs=frozenset(arcs))


def greedy_tokenize(table: CharacterTable, text: str) -> Tokenization:
    """Maximal-munch segmentation over direct codes only.

    At each position the longest matching code wins; among equal-length
    matches a canonical code beats an alternate, remaining ties go to
    table order.  Raises NoSegmentation at the first position with no
    direct match (no backtracking).
    """
    text = fold_case(text)
    path: list[Arc] = []
    i = 0
    n = len(text)
    while i < n:
        arc = None
        for j in range(min(i + table.max_code_len, n), i, -1):
            candidates = table.direct_matches(text[i:j])
            if not candidates:
                continue
            code = text[i:j]
            best = min(
                candidates,
                key=lambda e: (e.canonical != code, table.ordinal(e)),
            )
            arc = Arc(i, j, best)
            break
        if arc is None:
            raise NoSegmentation(text, i)
        path.append(arc)
        i = arc.end
    return Tokenization(path=tuple(path))


def _arc_order(arc: Arc) -> tuple[int, int, int]:
    return (arc.start, arc.end, ord(arc.entry.devanagari))


def enumerate_paths(lattice: TokenLattice, limit: int) -> list[Tokenization]:
    """Up to ``limit`` complete paths, fewest arcs first.

    Within one arc count, paths come out in lexicographic order of their
    arcs sorted by (start, end, codepoint), so the result is a pure
    function of the lattice.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    n = len(lattice.input)
    if n == 0:
        return [Tokenization(path=())]

    outgoing: dict[int, list[Arc]] = {}
    for arc in lattice.arcs:
        outgoing.setdefault(arc.start, []).append(arc)
    for arcs in outgoing.values():
        arcs.sort(key=_arc_order)

    # counts[pos][k] = number of complete paths from pos using exactly k arcs
    counts: list[dict[int, int]] = [dict() for _ in range(n + 1)]
    counts[n][0] = 1
    for pos in range(n - 1, -1, -1):
        for arc in outgoing.get(pos, ()):
            for k, c in counts[arc.end].items():
                counts[pos][k + 1] = counts[pos].get(k + 1, 0) + c

    results: list[Tokenization] = []
    prefix: list[Arc] = []

    def walk(pos: int, remaining: int) -> bool:
        if remaining == 0:
            results.append(Tokenization(path=tuple(prefix)))
            return len(results) >= limit
        for arc in outgoing.get(pos, ()):
            if counts[arc.end].get(remaining - 1, 0) == 0:
                continue
            prefix.append(arc)
            done = walk(arc.end, remaining - 1)
            prefix.pop()
            if done:
                return True
        return False

    for k in sorted(counts[0]):
        if walk(0, k):
            break
    return results


def count_paths(lattice: TokenLattice) -> int:
    """Total number of complete paths through the lattice."""
    n = len(lattice.input)
    if n == 0:
        return 1
    totals = [0] * (n + 1)
    totals[n] = 1
    by_start: dict[int, list[Arc]] = {}
    for arc in lattice.arcs:
        by_start.setdefault(arc.start, []).append(arc)
    for pos in range(n - 1, -1, -1):
        totals[pos] = sum(totals[a.end] for a in by_start.get(pos, ()))
    return totals[0]

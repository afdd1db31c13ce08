"""Deterministic Todd-Coxeter coset enumeration over a Presentation.

The hot scan loop lives in a compiled extension (``altcox._tc_core``) with
a pure-Python fallback (``altcox._tc_py``); set ALTCOX_PURE_PYTHON=1 to
force the fallback.  Both produce identical tables.

Tables act on left cosets: words act with their rightmost letter first,
matching the composition convention of the oracle module.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .words import Word, Presentation
from ._tc_py import CapExceeded, enumerate_core as _enumerate_py

if os.environ.get("ALTCOX_PURE_PYTHON"):
    _enumerate_native = None
else:
    try:
        from ._tc_core import enumerate_core as _enumerate_native
    except ImportError:
        _enumerate_native = None

BACKEND = "compiled" if _enumerate_native is not None else "python"
_core = _enumerate_native if _enumerate_native is not None else _enumerate_py

DEFAULT_CAP = 200_000


def _columns(w: Word):
    """Column indices of a word, reversed for left-action scanning."""
    return tuple(2 * (abs(x) - 1) + (0 if x > 0 else 1)
                 for x in reversed(w.letters))


@dataclass(frozen=True)
class CosetTable:
    """Completed, standardized table: rows[c][col] for live cosets 1..index."""

    presentation: Presentation
    rows: tuple[tuple[int, ...], ...]  # rows[0] unused; 1-based coset ids
    definition_log: tuple[tuple[int, int], ...]

    @property
    def index(self):
        return len(self.rows) - 1

    def act_letter(self, coset, letter):
        col = 2 * (abs(letter) - 1) + (0 if letter > 0 else 1)
        return self.rows[coset][col]

    def trace(self, coset, w: Word):
        """Apply word w to a coset (rightmost letter acts first)."""
        for x in reversed(w.letters):
            coset = self.act_letter(coset, x)
        return coset


@dataclass(frozen=True)
class EnumerationResult:
    status: str  # "completed" | "cap_exceeded"
    table: CosetTable | None
    index: int | None

    @property
    def completed(self):
        return self.status == "completed"


def enumerate(p: Presentation, subgroup=(), cap=DEFAULT_CAP) -> EnumerationResult:
    """HLT enumeration of the cosets of <subgroup> in the presented group.

    Deterministic: identical inputs give identical standardized tables.
    """
    ncols = 2 * p.rank
    if ncols == 0:
        raise ValueError("presentation has no generators")
    relators = [_columns(w) for w in p.relators]
    subwords = [_columns(w) for w in subgroup]
    try:
        flat, ndef, parent, deflog = _core(ncols, relators, subwords, cap)
    except CapExceeded:
        return EnumerationResult("cap_exceeded", None, None)

    def find(c):
        while parent[c] != c:
            c = parent[c]
        return c

    live = [c for c in range(1, ndef + 1) if find(c) == c]
    # renumber in traversal order from coset 1 (arrival column first, then
    # remaining generator columns in decreasing index, positive letters only;
    # this fixes the representative words produced downstream)
    number = {1: 1}
    order = [1]
    arrival = {1: None}
    qi = 0
    while qi < len(order):
        c = order[qi]
        qi += 1
        cols = [] if arrival[c] is None else [arrival[c]]
        cols += [2 * g for g in range(p.rank - 1, -1, -1) if 2 * g not in cols]
        for col in cols:
            d = flat[c * ncols + col]
            if d:
                d = find(d)
                if d not in number:
                    number[d] = len(number) + 1
                    arrival[d] = col
                    order.append(d)
    if len(number) != len(live):  # pragma: no cover - positive orbit covers all
        raise AssertionError("positive-letter traversal missed cosets")

    rows = [None] * (len(live) + 1)
    rows[0] = (0,) * ncols
    for c in order:
        rows[number[c]] = tuple(number[find(flat[c * ncols + x])] if flat[c * ncols + x] else 0
                                for x in range(ncols))
    table = CosetTable(p, tuple(rows), tuple(deflog))
    return EnumerationResult("completed", table, len(live))


def order(p: Presentation, cap=DEFAULT_CAP):
    """Group order via enumeration over the trivial subgroup.

    Returns the order, or None when the cap was exceeded.
    """
    r = enumerate(p, (), cap)
    return r.index if r.completed else None


def word_in_subgroup(r: EnumerationResult, w: Word) -> bool:
    """True iff w stabilizes coset 1 (the word problem for empty subgroups)."""
    if not r.completed:
        raise ValueError("enumeration did not complete")
    return r.table.trace(1, w) == 1


def words_equal(r: EnumerationResult, a: Word, b: Word) -> bool:
    """Equality in the group, via a regular (trivial-subgroup) table."""
    return word_in_subgroup(r, a * b.inverse())


@dataclass(frozen=True)
class SchreierGraph:
    """Cosets with canonical representative words plus the action edges."""

    table: CosetTable
    representatives: tuple[Word, ...]  # representatives[c] for coset c (index 0 unused)

    @property
    def presentation(self):
        return self.table.presentation


def schreier(r: EnumerationResult) -> SchreierGraph:
    """Representatives by the same traversal that standardized the table:
    from coset 1, arrival letter first then decreasing generator index,
    positive letters only; each new coset's word prepends the letter used."""
    if not r.completed:
        raise ValueError("enumeration did not complete")
    t = r.table
    nrank = t.presentation.rank
    reps = [None] * (t.index + 1)
    reps[1] = Word()
    arrival = {1: None}
    queue = [1]
    qi = 0
    while qi < len(queue):
        c = queue[qi]
        qi += 1
        gens = [] if arrival[c] is None else [arrival[c]]
        gens += [g for g in range(nrank - 1, -1, -1) if g not in gens]
        for g in gens:
            d = t.rows[c][2 * g]
            if d and reps[d] is None:
                reps[d] = Word.gen(g) * reps[c]
                arrival[d] = g
                queue.append(d)
    reps[0] = Word()
    return SchreierGraph(t, tuple(reps))


def _involutions(p: Presentation):
    """Generators g with a g^2 relator (rendered undirected in DOT)."""
    out = set()
    for w in p.relators:
        if len(w.letters) == 2 and w.letters[0] == w.letters[1] and w.letters[0] > 0:
            out.add(w.letters[0] - 1)
    return out

def to_dot(g: SchreierGraph) -> str:
    """DOT export of the Schreier graph: self-loops omitted,
    involution generators drawn as single undirected-styled edges."""
    t = g.table
    p = t.presentation
    invol = _involutions(p)
    lines = ["digraph schreier {"]
    from .words import render_word
    for c in range(1, t.index + 1):
        label = render_word(g.representatives[c], p) if g.representatives[c] else "H"
        lines.append(f'  {c} [label="{label}"];')
    for c in range(1, t.index + 1):
        for gen in range(p.rank):
            d = t.rows[c][2 * gen]
            if d == c:
                continue
            name = p.generators[gen]
            if gen in invol:
                if c < d:
                    lines.append(f'  {c} -> {d} [label="{name}", dir=none];')
            else:
                lines.append(f'  {c} -> {d} [label="{name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

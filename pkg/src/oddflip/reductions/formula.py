"""Quantified CNF formulas and set-cover instances, with their text formats.

Formulas use QDIMACS-style text::

    p cnf <vars> <clauses>
    a 1 2 0
    e 3 4 0
    1 -2 3 0

Variables are renumbered 1..N in prefix order on parsing, so a formula's block
``b`` owns a contiguous id range. Set-cover instances use::

    p setcover <n> <t>
    s 1 2 0
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import FormatError, ReductionError
from ..graph import _int, _meaningful_lines, _text

FORALL, EXISTS = "a", "e"


def _normalize_clause(clause: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(clause), key=lambda lit: (abs(lit), lit < 0)))


@dataclass(frozen=True)
class QuantifiedFormula:
    """CNF with a quantifier prefix of blocks ``(quantifier, size)``.

    Clauses hold signed 1-based variable ids; block ``b`` owns ids
    ``offset(b) + 1 .. offset(b) + size``.
    """

    prefix: tuple[tuple[str, int], ...]
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.prefix:
            raise ReductionError("empty quantifier prefix")
        for q, size in self.prefix:
            if q not in (FORALL, EXISTS) or size < 1:
                raise ReductionError(f"bad quantifier block ({q!r}, {size})")
        for a, b in zip(self.prefix, self.prefix[1:]):
            if a[0] == b[0]:
                raise ReductionError("adjacent quantifier blocks must alternate")
        if not self.clauses:
            raise ReductionError("formula has no clauses")
        nv = self.num_vars
        norm = []
        for c in self.clauses:
            if not c:
                raise ReductionError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > nv:
                    raise ReductionError(f"literal {lit} references an undeclared variable")
            norm.append(_normalize_clause(c))
        object.__setattr__(self, "clauses", tuple(norm))

    @classmethod
    def forall_exists(cls, m1: int, m2: int, clauses) -> "QuantifiedFormula":
        return cls(((FORALL, m1), (EXISTS, m2)), tuple(tuple(c) for c in clauses))

    @classmethod
    def exists_forall_exists(cls, m1: int, m2: int, m3: int, clauses) -> "QuantifiedFormula":
        return cls(((EXISTS, m1), (FORALL, m2), (EXISTS, m3)), tuple(tuple(c) for c in clauses))

    @property
    def shape(self) -> str:
        return "".join(q for q, _ in self.prefix)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.prefix)

    @property
    def num_vars(self) -> int:
        return sum(self.sizes)

    @property
    def K(self) -> int:
        return len(self.clauses)

    def locate(self, var: int) -> tuple[int, int]:
        """(block index, 0-based index within the block) of a 1-based variable."""
        for b, size in enumerate(self.sizes):
            if var <= size:
                return b, var - 1
            var -= size
        raise ReductionError("variable out of range")

    def var_id(self, block: int, index: int) -> int:
        return sum(self.sizes[:block]) + index + 1

    def to_text(self) -> str:
        out = [f"p cnf {self.num_vars} {self.K}\n"]
        nxt = 1
        for q, size in self.prefix:
            out.append(" ".join([q, *map(str, range(nxt, nxt + size)), "0"]) + "\n")
            nxt += size
        out.extend(" ".join([*map(str, c), "0"]) + "\n" for c in self.clauses)
        return "".join(out)

    def digest(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()[:16]


def parse_formula(data) -> QuantifiedFormula:
    lines = list(_meaningful_lines(_text(data)))
    if not lines:
        raise FormatError("missing 'p cnf' header", 1)
    lineno, head = lines[0]
    if len(head) != 4 or head[:2] != ["p", "cnf"]:
        raise FormatError("bad header, expected 'p cnf <vars> <clauses>'", lineno)
    nvars, nclauses = _int(head[2], lineno), _int(head[3], lineno)
    renumber: dict[int, int] = {}
    prefix: list[tuple[str, int]] = []
    clauses = []
    for lineno, toks in lines[1:]:
        if toks[-1] != "0":
            raise FormatError("line must end with 0", lineno)
        if toks[0] in (FORALL, EXISTS):
            if clauses:
                raise FormatError("quantifier line after clauses", lineno)
            vs = [_int(t, lineno) for t in toks[1:-1]]
            if not vs:
                raise FormatError("empty quantifier block", lineno)
            for v in vs:
                if not 1 <= v <= nvars:
                    raise FormatError(f"variable {v} out of range", lineno)
                if v in renumber:
                    raise FormatError(f"variable {v} quantified twice", lineno)
                renumber[v] = len(renumber) + 1
            if prefix and prefix[-1][0] == toks[0]:
                prefix[-1] = (toks[0], prefix[-1][1] + len(vs))
            else:
                prefix.append((toks[0], len(vs)))
        else:
            lits = [_int(t, lineno) for t in toks[:-1]]
            if not lits:
                raise FormatError("empty clause", lineno)
            try:
                clauses.append(tuple((1 if x > 0 else -1) * renumber[abs(x)] for x in lits))
            except KeyError as exc:
                raise FormatError(f"free variable {exc.args[0]}", lineno) from None
    if len(clauses) != nclauses:
        raise FormatError(f"header announces {nclauses} clauses, found {len(clauses)}")
    try:
        return QuantifiedFormula(tuple(prefix), tuple(clauses))
    except ReductionError as exc:
        raise FormatError(str(exc)) from None


@dataclass(frozen=True)
class SetCoverInstance:
    """Universe ``{1..n}`` and the list of sets (kept in input order)."""

    n: int
    sets: tuple[frozenset, ...]

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        if self.n < 1 or not sets:
            raise ReductionError("set cover needs n >= 1 and at least one set")
        union = set()
        for i, s in enumerate(sets):
            if not s:
                raise ReductionError(f"set {i + 1} is empty")
            if not all(1 <= e <= self.n for e in s):
                raise ReductionError(f"set {i + 1} has elements outside 1..{self.n}")
            union |= s
        if len(union) != self.n:
            missing = sorted(set(range(1, self.n + 1)) - union)
            raise ReductionError(f"sets do not cover elements {missing}")

    @classmethod
    def of(cls, n: int, sets: Sequence[Iterable[int]]) -> "SetCoverInstance":
        return cls(n, tuple(frozenset(s) for s in sets))

    @property
    def t(self) -> int:
        return len(self.sets)

    def to_text(self) -> str:
        out = [f"p setcover {self.n} {self.t}\n"]
        out.extend(" ".join(["s", *map(str, sorted(s)), "0"]) + "\n" for s in self.sets)
        return "".join(out)

    def digest(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()[:16]


def parse_setcover(data) -> SetCoverInstance:
    lines = list(_meaningful_lines(_text(data)))
    if not lines:
        raise FormatError("missing 'p setcover' header", 1)
    lineno, head = lines[0]
    if len(head) != 4 or head[:2] != ["p", "setcover"]:
        raise FormatError("bad header, expected 'p setcover <n> <t>'", lineno)
    n, t = _int(head[2], lineno), _int(head[3], lineno)
    sets = []
    for lineno, toks in lines[1:]:
        if toks[0] != "s" or toks[-1] != "0":
            raise FormatError("expected 's <elements...> 0'", lineno)
        sets.append(frozenset(_int(x, lineno) for x in toks[1:-1]))
    if len(sets) != t:
        raise FormatError(f"header announces {t} sets, found {len(sets)}")
    try:
        return SetCoverInstance(n, tuple(sets))
    except ReductionError as exc:
        raise FormatError(str(exc)) from None

"""Brute-force ground truth: quantified CNF evaluation, minimum set cover, and
exhaustive matching enumeration.

Everything here is deliberately naive so it can be trusted independently of
the search and matching code it checks. Witnesses are lexicographically
smallest (assignments enumerated with the first variable most significant).
"""

from __future__ import annotations

from itertools import combinations, product
from typing import NamedTuple, Optional, Sequence

from .errors import OracleError
from .graph import Graph
from .reductions.formula import EXISTS, FORALL, QuantifiedFormula, SetCoverInstance

MAX_VARS = 16
MAX_SETS = 20


def eval_cnf(phi: QuantifiedFormula, assignment: Sequence[int]) -> bool:
    if len(assignment) != phi.num_vars:
        raise OracleError(f"expected {phi.num_vars} values, got {len(assignment)}")
    return all(any(bool(assignment[abs(l) - 1]) == (l > 0) for l in c) for c in phi.clauses)


class QbfVerdict(NamedTuple):
    satisfied: bool
    # forall-exists: one (x, y or None) entry per x-assignment;
    # exists-forall-exists: the smallest working x, or None
    witness: object


def _guard(phi: QuantifiedFormula, shape: str) -> None:
    if phi.shape != shape:
        raise OracleError(f"expected prefix {shape!r}, got {phi.shape!r}")
    if phi.num_vars > MAX_VARS:
        raise OracleError(f"{phi.num_vars} variables exceed the oracle limit of {MAX_VARS}")


def _bits(m: int):
    return product((0, 1), repeat=m)


def exists_completion(phi: QuantifiedFormula, fixed: Sequence[int]) -> Optional[tuple]:
    """Smallest assignment of the last block making the CNF true, given the rest."""
    for z in _bits(phi.sizes[-1]):
        if eval_cnf(phi, tuple(fixed) + z):
            return z
    return None


def solve_forall_exists(phi: QuantifiedFormula) -> QbfVerdict:
    _guard(phi, FORALL + EXISTS)
    table = tuple((x, exists_completion(phi, x)) for x in _bits(phi.sizes[0]))
    return QbfVerdict(all(y is not None for _, y in table), table)


def solve_exists_forall_exists(psi: QuantifiedFormula) -> QbfVerdict:
    _guard(psi, EXISTS + FORALL + EXISTS)
    m1, m2, _ = psi.sizes
    for x in _bits(m1):
        if all(exists_completion(psi, x + y) is not None for y in _bits(m2)):
            return QbfVerdict(True, x)
    return QbfVerdict(False, None)


def min_set_cover(sc: SetCoverInstance) -> tuple[int, tuple[int, ...]]:
    """Minimum cover size and the lexicographically smallest cover (1-based)."""
    if sc.t > MAX_SETS:
        raise OracleError(f"{sc.t} sets exceed the oracle limit of {MAX_SETS}")
    universe = frozenset(range(1, sc.n + 1))
    for k in range(1, sc.t + 1):
        for combo in combinations(range(sc.t), k):
            if frozenset().union(*(sc.sets[i] for i in combo)) == universe:
                return k, tuple(i + 1 for i in combo)
    raise OracleError("the sets do not cover the universe")


# --- matchings ----------------------------------------------------------------

def all_matchings(g: Graph) -> list[frozenset]:
    """Every matching of ``g`` (edge subsets), by include/exclude over sorted edges."""
    edges = g.edges
    out = []

    def rec(i: int, used: frozenset, chosen: tuple):
        if i == len(edges):
            out.append(frozenset(chosen))
            return
        rec(i + 1, used, chosen)
        u, v = edges[i]
        if u not in used and v not in used:
            rec(i + 1, used | {u, v}, chosen + (edges[i],))

    rec(0, frozenset(), ())
    return out


def brute_odd_matchings(g: Graph) -> list[frozenset]:
    """Edge sets of all odd matchings, found by filtering every matching."""
    if g.n % 2 == 0:
        return []
    return [m for m in all_matchings(g) if 2 * len(m) == g.n - 1]


def brute_matching_number(g: Graph) -> int:
    return max(len(m) for m in all_matchings(g))

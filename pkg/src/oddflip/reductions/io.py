"""Reduction directories: ``graph.txt``, ``min.matching``, ``mtar.matching``,
``roles.txt`` and ``meta.txt`` with fixed names and byte-stable contents."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Union

from ..errors import FormatError
from ..graph import Graph, _meaningful_lines, _int, parse_graph, serialize_graph
from ..matching import OddMatching, parse_matching, serialize_matching

GRAPH, M_IN, M_TAR, ROLES, META = "graph.txt", "min.matching", "mtar.matching", "roles.txt", "meta.txt"


def serialize_roles(roles) -> str:
    return "".join(f"role {x + 1} {tag}\n" for x, tag in enumerate(roles))


def parse_roles(data: str, n: int) -> tuple[str, ...]:
    roles: list = [None] * n
    for lineno, toks in _meaningful_lines(data):
        if len(toks) != 3 or toks[0] != "role":
            raise FormatError("expected 'role <vertex> <tag>'", lineno)
        x = _int(toks[1], lineno)
        if not 1 <= x <= n:
            raise FormatError(f"vertex {x} out of range", lineno)
        if roles[x - 1] is not None:
            raise FormatError(f"vertex {x} has two roles", lineno)
        roles[x - 1] = toks[2]
    if any(r is None for r in roles):
        raise FormatError("some vertices have no role")
    return tuple(roles)


def serialize_meta(meta: dict) -> str:
    return "".join(f"{k} {meta[k]}\n" for k in sorted(meta))


def parse_meta(data: str) -> dict:
    out = {}
    for lineno, toks in _meaningful_lines(data):
        if len(toks) != 2:
            raise FormatError("expected '<key> <value>'", lineno)
        out[toks[0]] = toks[1]
    return out


@dataclass(frozen=True)
class ReductionFiles:
    graph: Graph
    m_in: OddMatching
    m_tar: OddMatching
    roles: tuple[str, ...]
    meta: dict


def write_reduction_dir(path: Union[str, Path], files: ReductionFiles) -> None:
    d = Path(path)
    d.mkdir(parents=True, exist_ok=True)
    contents = {
        GRAPH: serialize_graph(files.graph),
        M_IN: serialize_matching(files.m_in),
        M_TAR: serialize_matching(files.m_tar),
        ROLES: serialize_roles(files.roles),
        META: serialize_meta(files.meta),
    }
    for name, text in contents.items():
        (d / name).write_text(text, encoding="ascii", newline="\n")


def load_reduction_dir(path: Union[str, Path]) -> ReductionFiles:
    d = Path(path)
    g = parse_graph((d / GRAPH).read_text())
    return ReductionFiles(
        graph=g,
        m_in=parse_matching((d / M_IN).read_text(), g),
        m_tar=parse_matching((d / M_TAR).read_text(), g),
        roles=parse_roles((d / ROLES).read_text(), g.n),
        meta=parse_meta((d / META).read_text()),
    )

"""The p-deletion rewrite system ``u x^p v -> u v``.

Reachability is explored with a per-call visited set.  One-step successor
sets are a pure function of ``(w, p)`` and are cached process-wide.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet, List, Optional

from .words import PowerOccurrence, find_power_occurrences, format_word

DEFAULT_LIMIT = 1_000_000


class InvalidOccurrence(ValueError):
    pass


@dataclass(frozen=True)
class DeletionStep:
    before: str
    occurrence: PowerOccurrence
    after: str

    def to_dict(self):
        return {
            "before": self.before,
            "occurrence": list(self.occurrence.as_tuple()),
            "after": self.after,
        }

    def __str__(self):
        o = self.occurrence
        return f"{format_word(self.before)} ({o.start},{o.period},{o.exponent}) -> {format_word(self.after)}"


@dataclass
class ResidueReport:
    source: str
    exponent: int
    residues: List[str]
    deletable: bool
    strongly_deletable: bool
    visited_count: int
    truncated: bool = False

    def to_dict(self):
        return {
            "source": self.source,
            "p": self.exponent,
            "residues": list(self.residues),
            "deletable": self.deletable,
            "strongly_deletable": self.strongly_deletable,
            "visited": self.visited_count,
            "truncated": self.truncated,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    def summary(self) -> str:
        listed = ",".join(format_word(r) for r in self.residues)
        line = (
            f"deletable={str(self.deletable).lower()} "
            f"strong={str(self.strongly_deletable).lower()} residues=[{listed}]"
        )
        if self.truncated:
            line += " truncated=true"
        return line


def delete_at(w: str, occ: PowerOccurrence) -> str:
    if not occ.occurs_in(w):
        raise InvalidOccurrence(f"{occ.as_tuple()} is not a power occurrence in {w!r}")
    return w[: occ.start] + w[occ.end :]


@lru_cache(maxsize=1 << 18)
def _successors(w: str, p: int) -> FrozenSet[str]:
    return frozenset(w[: o.start] + w[o.end :] for o in find_power_occurrences(w, p))


def successors(w: str, p: int) -> FrozenSet[str]:
    return _successors(w, p)


def _explore(w: str, p: int, limit: Optional[int], stop_on_empty=False, stop_on_residue=False):
    """Depth-first closure under p-deletion.

    Returns ``(visited, residues, truncated)``.  Stops early when asked to
    once the empty word, or a non-empty residue, has been reached.
    """
    visited = {w}
    stack = [w]
    found = set()
    while stack:
        u = stack.pop()
        nxt = _successors(u, p)
        if not nxt:
            found.add(u)
            if (stop_on_empty and u == "") or (stop_on_residue and u != ""):
                return visited, found, False
            continue
        for v in nxt:
            if v not in visited:
                if limit is not None and len(visited) >= limit:
                    return visited, found, True
                visited.add(v)
                stack.append(v)
    return visited, found, False


def residues(w: str, p: int, limit: int = DEFAULT_LIMIT) -> ResidueReport:
    if p < 1 or limit < 1:
        raise ValueError("p and limit must be positive")
    visited, found, truncated = _explore(w, p, limit)
    ordered = sorted(found)
    return ResidueReport(
        source=w,
        exponent=p,
        residues=ordered,
        deletable=(not truncated) and "" in found,
        strongly_deletable=(not truncated) and ordered == [""],
        visited_count=len(visited),
        truncated=truncated,
    )


def is_deletable(w: str, p: int) -> bool:
    _, found, _ = _explore(w, p, None, stop_on_empty=True)
    return "" in found


def is_strongly_deletable(w: str, p: int) -> bool:
    # A non-empty residue settles the answer; reaching ε does not.
    _, found, _ = _explore(w, p, None, stop_on_residue=True)
    return found == {""}


def deletion_certificate(w: str, p: int) -> Optional[List[DeletionStep]]:
    """A replayable sequence of p-deletions taking ``w`` to the empty word, or None."""
    parent = {w: None}
    stack = [w]
    while stack:
        u = stack.pop()
        if u == "":
            break
        # reversed push order: the leftmost occurrence is expanded first
        for o in reversed(find_power_occurrences(u, p)):
            v = u[: o.start] + u[o.end :]
            if v not in parent:
                parent[v] = (u, o)
                stack.append(v)
    if "" not in parent:
        return None
    steps = []
    v = ""
    while parent[v] is not None:
        u, o = parent[v]
        steps.append(DeletionStep(u, o, v))
        v = u
    steps.reverse()
    return steps

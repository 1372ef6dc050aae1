"""Indexed and linear indexed grammars.

A nonterminal occurrence in a sentential form carries an index stack, stored
as a tuple whose first element is the top.  Every production is one of four
kinds, distinguished by how it treats the stack ``s`` of its left-hand side:

``copy``   A[s]    -> rhs     (applies to any stack)
``push``   A[s]    -> rhs     (the marked right-hand nonterminal gets ``g s``)
``pop``    A[g s]  -> rhs     (applies only when the top of the stack is ``g``)
``empty``  A[]     -> rhs     (applies only to the empty stack)

Right-hand nonterminals with ``carries_stack`` receive ``s`` (the stack left
after matching), the others receive the empty stack.  The two grammar classes
differ only in which right-hand sides they accept.

Languages are computed up to a length bound.  ``enumerate_language`` solves
the bounded yield of every reachable (nonterminal, stack) pair as a least
fixed point, which also handles nonterminals that derive the empty word
through cycles.  ``enumerate_forms`` is the literal breadth-first search over
sentential forms and is kept as an independent cross-check.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Set, Tuple, Union

from .words import UNIVERSE

COPY = "copy"
PUSH = "push"
POP = "pop"
EMPTY = "empty"
KINDS = (COPY, PUSH, POP, EMPTY)

INDEXED = "indexed"
LINEAR = "linear"


class GrammarError(ValueError):
    pass


class IncompleteSearch(RuntimeError):
    pass


@dataclass(frozen=True)
class Terminal:
    symbol: str


@dataclass(frozen=True)
class Nonterminal:
    name: str
    carries_stack: bool = True
    push: Optional[str] = None


Symbol = Union[Terminal, Nonterminal]


@dataclass(frozen=True)
class Rule:
    kind: str
    lhs: str
    rhs: Tuple[Symbol, ...] = ()
    lhs_index: Optional[str] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GrammarError(f"unknown rule kind {self.kind!r}")
        if (self.kind == POP) != (self.lhs_index is not None):
            raise GrammarError("exactly the pop rules name an index on the left-hand side")
        object.__setattr__(self, "rhs", tuple(self.rhs))

    def apply(self, stack: Tuple[str, ...]) -> Optional[tuple]:
        """Right-hand side instantiated for a left-hand stack, or None if not applicable."""
        if self.kind == POP:
            if not stack or stack[0] != self.lhs_index:
                return None
            rest = stack[1:]
        elif self.kind == EMPTY:
            if stack:
                return None
            rest = ()
        else:
            rest = stack
        out = []
        for sym in self.rhs:
            if isinstance(sym, Terminal):
                out.append(sym.symbol)
            elif not sym.carries_stack:
                out.append(Slot(sym.name, ()))
            elif sym.push is not None:
                out.append(Slot(sym.name, (sym.push,) + rest))
            else:
                out.append(Slot(sym.name, rest))
        return tuple(out)

    def __str__(self):
        def show(sym):
            if isinstance(sym, Terminal):
                return sym.symbol
            if not sym.carries_stack:
                return f"{sym.name}[]"
            if sym.push is not None:
                return f"{sym.name}[{sym.push} s]"
            return f"{sym.name}[s]"

        lhs = {POP: f"{self.lhs}[{self.lhs_index} s]", EMPTY: f"{self.lhs}[]"}.get(self.kind, f"{self.lhs}[s]")
        rhs = " ".join(show(s) for s in self.rhs) or "ε"
        return f"{lhs} -> {rhs}"


class Slot(NamedTuple):
    """A nonterminal occurrence with its index stack."""

    name: str
    stack: Tuple[str, ...]

    def __str__(self):
        return f"{self.name}[{' '.join(self.stack)}]"


# A sentential form: terminals are plain strings, nonterminals are Slots.
SententialForm = Tuple[Union[str, Slot], ...]


def format_form(form: SententialForm) -> str:
    return " ".join(str(x) for x in form) or "ε"


class Grammar:
    formalism = ""

    def __init__(self, nonterminals, terminals, indices, rules, start):
        self.nonterminals = tuple(dict.fromkeys(nonterminals))
        self.terminals = tuple(dict.fromkeys(terminals))
        self.indices = tuple(dict.fromkeys(indices))
        self.rules = tuple(dict.fromkeys(rules))
        self.start = start
        self._check()
        self._by_lhs: Dict[str, List[Rule]] = defaultdict(list)
        for r in self.rules:
            self._by_lhs[r.lhs].append(r)

    def _check(self):
        if self.start not in self.nonterminals:
            raise GrammarError(f"start symbol {self.start!r} is not a nonterminal")
        if set(self.nonterminals) & set(self.terminals):
            raise GrammarError("nonterminals and terminals overlap")
        for r in self.rules:
            if r.lhs not in self.nonterminals:
                raise GrammarError(f"undeclared nonterminal {r.lhs!r} in {r}")
            if r.lhs_index is not None and r.lhs_index not in self.indices:
                raise GrammarError(f"undeclared index {r.lhs_index!r} in {r}")
            for sym in r.rhs:
                if isinstance(sym, Terminal):
                    if sym.symbol not in self.terminals:
                        raise GrammarError(f"undeclared terminal {sym.symbol!r} in {r}")
                else:
                    if sym.name not in self.nonterminals:
                        raise GrammarError(f"undeclared nonterminal {sym.name!r} in {r}")
                    if sym.push is not None and sym.push not in self.indices:
                        raise GrammarError(f"undeclared index {sym.push!r} in {r}")
                    if sym.push is not None and not sym.carries_stack:
                        raise GrammarError(f"a push target must carry the stack in {r}")
            self._check_form(r)

    def _check_form(self, rule: Rule):
        raise NotImplementedError

    def rules_for(self, name: str) -> List[Rule]:
        return self._by_lhs.get(name, [])

    def start_form(self) -> SententialForm:
        return (Slot(self.start, ()),)

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.nonterminals == other.nonterminals
            and self.terminals == other.terminals
            and self.indices == other.indices
            and set(self.rules) == set(other.rules)
            and self.start == other.start
        )

    def __repr__(self):
        return (
            f"{type(self).__name__}(N={list(self.nonterminals)}, T={list(self.terminals)}, "
            f"I={list(self.indices)}, start={self.start!r}, {len(self.rules)} rules)"
        )

    def pretty(self) -> str:
        return "\n".join(str(r) for r in self.rules)

    def to_dict(self):
        return {
            "formalism": self.formalism,
            "nonterminals": list(self.nonterminals),
            "terminals": list(self.terminals),
            "indices": list(self.indices),
            "start": self.start,
            "rules": [_rule_to_dict(r) for r in self.rules],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


class IndexedGrammar(Grammar):
    formalism = INDEXED

    def _check_form(self, rule):
        nts = [s for s in rule.rhs if isinstance(s, Nonterminal)]
        if rule.kind == PUSH:
            if len(rule.rhs) != 1 or not nts or nts[0].push is None:
                raise GrammarError(f"an indexed push rule has the form A[s] -> B[g s]: {rule}")
        elif rule.kind == EMPTY:
            if any(s.carries_stack for s in nts):
                raise GrammarError(f"an empty-stack rule passes no stack: {rule}")
        elif any(not s.carries_stack or s.push is not None for s in nts):
            raise GrammarError(f"every nonterminal of a {rule.kind} rule receives the stack: {rule}")


class LinearIndexedGrammar(Grammar):
    formalism = LINEAR

    def _check_form(self, rule):
        carriers = [s for s in rule.rhs if isinstance(s, Nonterminal) and s.carries_stack]
        if rule.kind == EMPTY:
            if carriers:
                raise GrammarError(f"an empty-stack rule passes no stack: {rule}")
            return
        if len(carriers) != 1:
            raise GrammarError(f"exactly one nonterminal receives the stack: {rule}")
        if (rule.kind == PUSH) != (carriers[0].push is not None):
            raise GrammarError(f"only push rules push, and they push onto the carrier: {rule}")


# -- serialisation ---------------------------------------------------------------


def _rule_to_dict(rule: Rule):
    d = {"kind": rule.kind, "lhs": rule.lhs}
    if rule.lhs_index is not None:
        d["lhs_index"] = rule.lhs_index
    rhs = []
    for sym in rule.rhs:
        if isinstance(sym, Terminal):
            rhs.append({"t": sym.symbol})
        else:
            item = {"nt": sym.name, "carries_stack": sym.carries_stack}
            if sym.push is not None:
                item["push"] = sym.push
            rhs.append(item)
    d["rhs"] = rhs
    return d


def _rule_from_dict(d) -> Rule:
    rhs = []
    for item in d.get("rhs", []):
        if "t" in item:
            rhs.append(Terminal(item["t"]))
        else:
            rhs.append(Nonterminal(item["nt"], bool(item.get("carries_stack", True)), item.get("push")))
    return Rule(d["kind"], d["lhs"], tuple(rhs), d.get("lhs_index"))


def grammar_from_dict(doc) -> Grammar:
    formalism = doc.get("formalism", INDEXED)
    cls = {INDEXED: IndexedGrammar, LINEAR: LinearIndexedGrammar}.get(formalism)
    if cls is None:
        raise GrammarError(f"unknown formalism {formalism!r}")
    return cls(
        doc["nonterminals"],
        doc["terminals"],
        doc["indices"],
        [_rule_from_dict(r) for r in doc["rules"]],
        doc["start"],
    )


def grammar_from_json(text: str) -> Grammar:
    return grammar_from_dict(json.loads(text))


# -- the grammars for powers -------------------------------------------------


def _letters_and_indices(k: int):
    if not 1 <= k <= len(UNIVERSE):
        raise GrammarError(f"alphabet size must be in 1..{len(UNIVERSE)}")
    letters = list(UNIVERSE[:k])
    return letters, [f"g{i + 1}" for i in range(k)]


def build_power_grammar(k: int, p: int) -> IndexedGrammar:
    """Indexed grammar for {u^p : u over the k-letter alphabet}.

    S[s] -> S[g_i s],  S[s] -> T[s]^p,  T[g_i s] -> a_i T[s],  T[] -> ε
    """
    if p < 1:
        raise GrammarError("exponent must be positive")
    letters, idx = _letters_and_indices(k)
    rules = [Rule(PUSH, "S", (Nonterminal("S", push=g),)) for g in idx]
    rules.append(Rule(COPY, "S", (Nonterminal("T"),) * p))
    rules += [Rule(POP, "T", (Terminal(a), Nonterminal("T")), g) for a, g in zip(letters, idx)]
    rules.append(Rule(EMPTY, "T", ()))
    return IndexedGrammar(["S", "T"], letters, idx, rules, "S")


def build_square_lig(k: int) -> LinearIndexedGrammar:
    """Linear indexed grammar for {uu : u over the k-letter alphabet}.

    S[s] -> a_i S[g_i s],  S[s] -> T[s],  T[g_i s] -> T[s] a_i,  T[] -> ε
    """
    letters, idx = _letters_and_indices(k)
    rules = [Rule(PUSH, "S", (Terminal(a), Nonterminal("S", push=g))) for a, g in zip(letters, idx)]
    rules.append(Rule(COPY, "S", (Nonterminal("T"),)))
    rules += [Rule(POP, "T", (Nonterminal("T"), Terminal(a)), g) for a, g in zip(letters, idx)]
    rules.append(Rule(EMPTY, "T", ()))
    return LinearIndexedGrammar(["S", "T"], letters, idx, rules, "S")


def build_epsilon_grammar(linear: bool = False) -> Grammar:
    cls = LinearIndexedGrammar if linear else IndexedGrammar
    return cls(["S"], [], [], [Rule(EMPTY, "S", ())], "S")


# -- iterated insertion ------------------------------------------------------


def _rename(g: Grammar, nt_map: Dict[str, str], idx_map: Dict[str, str]) -> Grammar:
    def sym(s):
        if isinstance(s, Terminal):
            return s
        push = idx_map.get(s.push, s.push) if s.push is not None else None
        return Nonterminal(nt_map.get(s.name, s.name), s.carries_stack, push)

    rules = [
        Rule(
            r.kind,
            nt_map.get(r.lhs, r.lhs),
            tuple(sym(s) for s in r.rhs),
            idx_map.get(r.lhs_index, r.lhs_index) if r.lhs_index is not None else None,
        )
        for r in g.rules
    ]
    return type(g)(
        [nt_map.get(n, n) for n in g.nonterminals],
        g.terminals,
        [idx_map.get(i, i) for i in g.indices],
        rules,
        nt_map.get(g.start, g.start),
    )


def _fresh(name: str, taken: Set[str]) -> str:
    while name in taken:
        name += "'"
    return name


def make_disjoint(g1: Grammar, g2: Grammar) -> Tuple[Grammar, Grammar]:
    """Suffix every nonterminal (resp. index) of both grammars with _1/_2 when they collide."""
    taken = set(g1.nonterminals) | set(g2.nonterminals) | set(g1.indices) | set(g2.indices)
    taken |= set(g1.terminals) | set(g2.terminals)

    def suffixed(names, tag):
        out = {}
        for n in names:
            out[n] = _fresh(f"{n}_{tag}", taken | set(out.values()))
            taken.add(out[n])
        return out

    nt1 = nt2 = idx1 = idx2 = {}
    n1, n2 = set(g1.nonterminals), set(g2.nonterminals)
    if n1 & n2 or n1 & set(g2.terminals) or n2 & set(g1.terminals):
        nt1, nt2 = suffixed(g1.nonterminals, 1), suffixed(g2.nonterminals, 2)
    if set(g1.indices) & set(g2.indices):
        idx1, idx2 = suffixed(g1.indices, 1), suffixed(g2.indices, 2)
    return _rename(g1, nt1, idx1), _rename(g2, nt2, idx2)


def _with_insertions(rule: Rule, inserted: Nonterminal) -> List[Rule]:
    """Variants of ``rule`` with ``inserted`` placed in any non-empty set of gaps of its right-hand side.

    One gap at a time is not enough: two insertions into distinct gaps of a
    single rule application, such as y ab y' from ab, would be underivable.
    """
    gaps = len(rule.rhs) + 1
    out = []
    for chosen in itertools.product((False, True), repeat=gaps):
        if not any(chosen):
            continue
        rhs = []
        for i in range(gaps):
            if chosen[i]:
                rhs.append(inserted)
            if i < len(rule.rhs):
                rhs.append(rule.rhs[i])
        out.append(Rule(rule.kind, rule.lhs, tuple(rhs), rule.lhs_index))
    return out


def insertion_closure_indexed(g1: IndexedGrammar, g2: IndexedGrammar) -> IndexedGrammar:
    """Indexed grammar for the iterated insertion of L(g2) into L(g1).

    Every copy, pop and empty-stack rule of either grammar gets variants with a
    fresh nonterminal S' in any non-empty set of gaps of its right-hand side.  S' discards
    whatever stack it inherits and then becomes the start symbol of ``g2``.
    """
    g1, g2 = make_disjoint(g1, g2)
    taken = set(g1.nonterminals) | set(g2.nonterminals) | set(g1.terminals) | set(g2.terminals)
    taken |= set(g1.indices) | set(g2.indices)
    ins = _fresh("S'", taken)
    indices = list(g1.indices) + list(g2.indices)
    rules = list(g1.rules) + list(g2.rules)
    for r in g1.rules + g2.rules:
        if r.kind == PUSH:
            continue
        rules += _with_insertions(r, Nonterminal(ins, carries_stack=r.kind != EMPTY))
    rules += [Rule(POP, ins, (Nonterminal(ins),), g) for g in indices]
    rules.append(Rule(EMPTY, ins, (Nonterminal(g2.start, carries_stack=False),)))
    return IndexedGrammar(
        list(g1.nonterminals) + list(g2.nonterminals) + [ins],
        list(g1.terminals) + list(g2.terminals),
        indices,
        rules,
        g1.start,
    )


def insertion_closure_lig(g1: LinearIndexedGrammar, g2: LinearIndexedGrammar) -> LinearIndexedGrammar:
    """Linear indexed grammar for the iterated insertion of L(g2) into L(g1).

    Every rule of either grammar gets variants with the start symbol of ``g2``,
    carrying an empty stack, in any non-empty set of gaps of its right-hand side.
    """
    g1, g2 = make_disjoint(g1, g2)
    inserted = Nonterminal(g2.start, carries_stack=False)
    rules = list(g1.rules) + list(g2.rules)
    for r in g1.rules + g2.rules:
        rules += _with_insertions(r, inserted)
    return LinearIndexedGrammar(
        list(g1.nonterminals) + list(g2.nonterminals),
        list(g1.terminals) + list(g2.terminals),
        list(g1.indices) + list(g2.indices),
        rules,
        g1.start,
    )


# -- derivations -------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationBounds:
    max_word_length: int
    max_stack_depth: Optional[int] = None  # defaults to max_word_length
    max_derivation_steps: int = 5_000_000
    max_frontier_size: int = 1_000_000

    def __post_init__(self):
        if self.max_stack_depth is None:
            object.__setattr__(self, "max_stack_depth", max(1, self.max_word_length))
        if self.max_word_length < 0 or min(self.max_stack_depth, self.max_derivation_steps, self.max_frontier_size) < 1:
            raise ValueError("enumeration bounds must be positive")


class Enumeration(NamedTuple):
    words: FrozenSet[str]
    complete: bool


def derive_successors(g: Grammar, form: SententialForm) -> Set[SententialForm]:
    """Every form reachable by rewriting one nonterminal occurrence with one rule."""
    out = set()
    for i, item in enumerate(form):
        if isinstance(item, Slot):
            out.update(_rewrite_at(g, form, i))
    return out


def _rewrite_at(g: Grammar, form: SententialForm, i: int):
    name, stack = form[i]
    for rule in g.rules_for(name):
        rhs = rule.apply(stack)
        if rhs is not None:
            yield form[:i] + rhs + form[i + 1 :]


def _terminal_count(form: SententialForm) -> int:
    return sum(1 for x in form if not isinstance(x, Slot))


def enumerate_forms(g: Grammar, bounds: EnumerationBounds, leftmost: bool = True) -> Enumeration:
    """Breadth-first search over sentential forms.

    Forms with more than ``max_word_length`` terminals or a stack deeper than
    ``max_stack_depth`` are pruned.  With ``leftmost`` only the leftmost
    nonterminal is rewritten, which yields the same language with far fewer
    forms.  Grammars with nonterminals that derive ε through cycles have
    infinitely many forms and come back incomplete.
    """
    start = g.start_form()
    seen = {start}
    queue = deque([start])
    words = set()
    steps = 0
    while queue:
        form = queue.popleft()
        slots = [i for i, x in enumerate(form) if isinstance(x, Slot)]
        if not slots:
            words.add("".join(form))
            continue
        positions = slots[:1] if leftmost else slots
        for i in positions:
            for nxt in _rewrite_at(g, form, i):
                steps += 1
                if steps > bounds.max_derivation_steps:
                    return Enumeration(frozenset(words), False)
                if nxt in seen or _terminal_count(nxt) > bounds.max_word_length:
                    continue
                if any(isinstance(x, Slot) and len(x.stack) > bounds.max_stack_depth for x in nxt):
                    continue
                if len(seen) >= bounds.max_frontier_size:
                    return Enumeration(frozenset(words), False)
                seen.add(nxt)
                queue.append(nxt)
    return Enumeration(frozenset(words), True)


class _YieldSolver:
    """Bounded yields of every reachable (nonterminal, stack) pair.

    1. discover the pairs reachable from the start symbol, stacks capped at
       ``max_stack_depth``, and instantiate each applicable rule;
    2. compute the shortest yield of every pair and drop productions that
       cannot fit within the length cap;
    3. iterate the yield sets to their least fixed point.

    ``accept`` filters every partial concatenation; membership uses it to
    keep only factors of the target word.
    """

    def __init__(self, g: Grammar, cap: int, bounds: EnumerationBounds, accept=None):
        self.g = g
        self.cap = cap
        self.bounds = bounds
        self.accept = accept
        self.complete = True
        self.steps = 0

    def solve(self) -> Set[str]:
        start = Slot(self.g.start, ())
        prods = self._discover(start)
        minlen = self._shortest(prods)
        if minlen.get(start, _INF) > self.cap:
            return set()
        prods = {
            item: [rhs for rhs in alts if self._rhs_min(rhs, minlen) <= self.cap]
            for item, alts in prods.items()
            if minlen[item] <= self.cap
        }
        live = self._reachable(start, prods)
        return self._fixpoint(live, prods, minlen).get(start, set())

    def _discover(self, start: Slot):
        prods: Dict[Slot, List[tuple]] = {}
        queue = deque([start])
        prods[start] = []
        depth = self.bounds.max_stack_depth
        while queue:
            item = queue.popleft()
            alts = prods[item]
            for rule in self.g.rules_for(item.name):
                rhs = rule.apply(item.stack)
                if rhs is None:
                    continue
                if any(isinstance(x, Slot) and len(x.stack) > depth for x in rhs):
                    continue
                if _terminal_count(rhs) > self.cap:
                    continue
                alts.append(rhs)
                for x in rhs:
                    if isinstance(x, Slot) and x not in prods:
                        if len(prods) >= self.bounds.max_frontier_size:
                            self.complete = False
                            continue
                        prods[x] = []
                        queue.append(x)
        return prods

    @staticmethod
    def _rhs_min(rhs, minlen):
        return sum(minlen.get(x, _INF) if isinstance(x, Slot) else 1 for x in rhs)

    def _shortest(self, prods):
        users = defaultdict(set)
        for item, alts in prods.items():
            for rhs in alts:
                for x in rhs:
                    if isinstance(x, Slot):
                        users[x].add(item)
        minlen = {item: _INF for item in prods}
        work = deque(prods)
        queued = set(prods)
        while work:
            item = work.popleft()
            queued.discard(item)
            best = min((self._rhs_min(rhs, minlen) for rhs in prods[item]), default=_INF)
            if best < minlen[item]:
                minlen[item] = best
                for u in users[item]:
                    if u not in queued:
                        queued.add(u)
                        work.append(u)
        return minlen

    @staticmethod
    def _reachable(start, prods):
        live = {start}
        stack = [start]
        while stack:
            item = stack.pop()
            for rhs in prods[item]:
                for x in rhs:
                    if isinstance(x, Slot) and x not in live:
                        live.add(x)
                        stack.append(x)
        return live

    def _fixpoint(self, live, prods, minlen):
        # Semi-naive iteration: only newly derived words of an item are pushed
        # through the productions that use it.
        uses = defaultdict(list)
        for item in live:
            for rhs in prods[item]:
                for i, x in enumerate(rhs):
                    if isinstance(x, Slot):
                        uses[x].append((item, rhs, i))
        yields: Dict[Slot, Dict[int, Set[str]]] = {item: defaultdict(set) for item in live}
        pending: Dict[Slot, Set[str]] = defaultdict(set)
        work = deque()

        def add(item, words):
            bucket = yields[item]
            fresh = [w for w in words if w not in bucket[len(w)]]
            if not fresh:
                return
            for w in fresh:
                bucket[len(w)].add(w)
            if item not in pending:
                work.append(item)
            pending[item].update(fresh)

        for item in live:
            for rhs in prods[item]:
                if not any(isinstance(x, Slot) for x in rhs):
                    add(item, {"".join(rhs)})
        while work:
            item = work.popleft()
            delta = pending.pop(item)
            delta_by_len = defaultdict(set)
            for w in delta:
                delta_by_len[len(w)].add(w)
            for user, rhs, i in uses[item]:
                self.steps += 1
                if self.steps > self.bounds.max_derivation_steps:
                    self.complete = False
                    return _flatten(yields)
                add(user, self._concat(rhs, yields, minlen, i, delta_by_len))
        return _flatten(yields)

    def _concat(self, rhs, yields, minlen, at, delta):
        """Words of ``rhs`` whose part at position ``at`` comes from ``delta``."""
        rest = [0] * (len(rhs) + 1)
        for i in range(len(rhs) - 1, -1, -1):
            x = rhs[i]
            rest[i] = rest[i + 1] + (minlen[x] if isinstance(x, Slot) else 1)
        partial = {""}
        accept = self.accept
        for i, x in enumerate(rhs):
            room = self.cap - rest[i + 1]
            if isinstance(x, Slot):
                part = delta if i == at else yields[x]
                nxt = set()
                for u in partial:
                    for n in range(room - len(u) + 1):
                        vs = part.get(n)
                        if vs:
                            nxt.update(u + v for v in vs)
                partial = nxt
            else:
                partial = {u + x for u in partial if len(u) < room}
            if accept is not None:
                partial = {u for u in partial if accept(u)}
            if not partial:
                break
        return partial


def _flatten(yields):
    return {item: set().union(*by_len.values()) for item, by_len in yields.items()}


_INF = float("inf")


def enumerate_language(g: Grammar, bounds: EnumerationBounds) -> Enumeration:
    """All words of length at most ``bounds.max_word_length`` derivable in ``g``.

    ``complete`` is False when the pair or step budget ran out; the words
    returned are then a subset of the bounded language.  Stacks deeper than
    ``bounds.max_stack_depth`` are never explored.
    """
    solver = _YieldSolver(g, bounds.max_word_length, bounds)
    words = solver.solve()
    return Enumeration(frozenset(words), solver.complete)


def member(g: Grammar, w: str, bounds: Optional[EnumerationBounds] = None) -> bool:
    """Bounded membership test: yields are restricted to factors of ``w``.

    Raises IncompleteSearch when a budget ran out before ``w`` was derived.
    """
    if bounds is None:
        bounds = EnumerationBounds(len(w))
    if len(w) > bounds.max_word_length:
        raise ValueError(f"|w| = {len(w)} exceeds max_word_length = {bounds.max_word_length}")
    factors = {w[i:j] for i in range(len(w) + 1) for j in range(i, len(w) + 1)}
    solver = _YieldSolver(g, len(w), bounds, accept=factors.__contains__)
    found = w in solver.solve()
    if not found and not solver.complete:
        raise IncompleteSearch(f"search budget exhausted before deciding {w!r}")
    return found

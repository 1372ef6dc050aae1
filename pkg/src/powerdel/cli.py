"""Command-line interface.

Exit codes: 0 success or membership true, 1 membership false or failed
verification, 2 usage error, 3 truncated or undecided search.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import analysis, deletion, grammar, known
from .words import AlphabetError, format_word, parse_word, shortlex

OK, NO, USAGE, INCOMPLETE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _word(args, token: str) -> str:
    try:
        return parse_word(token, getattr(args, "k", None))
    except AlphabetError as e:
        raise UsageError(str(e)) from None


def _read_words(path: str) -> List[str]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(parse_word(line))
    return out


def _write_words(words) -> None:
    _emit("\n".join(format_word(w) for w in shortlex(words)) if words else "")


def _load_grammar(path: str) -> grammar.Grammar:
    with open(path, encoding="utf-8") as fh:
        return grammar.grammar_from_json(fh.read())


# -- subcommands -------------------------------------------------------------


def cmd_check(args) -> int:
    w = _word(args, args.word)
    report = deletion.residues(w, args.p, limit=args.limit)
    _emit(report.to_json() if args.json else report.summary())
    if report.truncated:
        return INCOMPLETE
    return OK if report.deletable else NO


def cmd_certificate(args) -> int:
    w = _word(args, args.word)
    steps = deletion.deletion_certificate(w, args.p)
    if args.json:
        _emit(json.dumps(None if steps is None else [s.to_dict() for s in steps]))
    elif steps is None:
        _emit("none")
    else:
        _emit("\n".join(str(s) for s in steps) if steps else format_word(w))
    return NO if steps is None else OK


def cmd_oracle(args) -> int:
    w = _word(args, args.word)
    verdict = known.oracle_verdict(w, args.k, args.p)
    _emit(verdict.to_json())
    if verdict.verdict is None:
        return INCOMPLETE
    return OK if verdict.verdict else NO


def cmd_gen(args) -> int:
    if args.family == "squarefree":
        if args.length is None:
            raise UsageError("gen squarefree needs --length")
        _emit(format_word(known.squarefree_word(args.length)))
    else:
        if args.index is None:
            raise UsageError("gen fibonacci needs --index")
        _emit(known.fibonacci_word(args.index))
    return OK


def cmd_grammar_build(args) -> int:
    kind = args.kind
    if kind == "power":
        g = grammar.build_power_grammar(args.k, args.p)
    elif kind == "square":
        g = grammar.build_square_lig(args.k)
    elif kind == "epsilon":
        g = grammar.build_epsilon_grammar(linear=args.linear)
    else:
        if not (args.g1 and args.g2):
            raise UsageError("grammar build closure needs --g1 and --g2")
        g1, g2 = _load_grammar(args.g1), _load_grammar(args.g2)
        if isinstance(g1, grammar.LinearIndexedGrammar) and isinstance(g2, grammar.LinearIndexedGrammar):
            g = grammar.insertion_closure_lig(g1, g2)
        elif isinstance(g1, grammar.IndexedGrammar) and isinstance(g2, grammar.IndexedGrammar):
            g = grammar.insertion_closure_indexed(g1, g2)
        else:
            raise UsageError("closure needs two indexed or two linear indexed grammars")
    text = g.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


def _bounds(args) -> grammar.EnumerationBounds:
    return grammar.EnumerationBounds(
        args.maxlen,
        max_stack_depth=args.max_depth,
        max_derivation_steps=args.max_steps,
        max_frontier_size=args.max_frontier,
    )


def cmd_grammar_enum(args) -> int:
    g = _load_grammar(args.grammar)
    result = grammar.enumerate_language(g, _bounds(args))
    _write_words(result.words)
    if not result.complete:
        print("incomplete enumeration", file=sys.stderr)
        return INCOMPLETE
    return OK


def cmd_grammar_member(args) -> int:
    g = _load_grammar(args.grammar)
    w = _word(args, args.word)
    try:
        found = grammar.member(g, w, _bounds(args))
    except grammar.IncompleteSearch as e:
        print(str(e), file=sys.stderr)
        return INCOMPLETE
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(str(found).lower())
    return OK if found else NO


def cmd_insert(args) -> int:
    l1, l2 = _read_words(args.l1), _read_words(args.l2)
    op = analysis.insert_star_bounded if args.star else analysis.insert_once
    _write_words(op(l1, l2, args.cap))
    return OK


def cmd_mn_witness(args) -> int:
    try:
        ws = analysis.mn_witnesses(args.k, args.count, oracle_budget=args.budget, strong=args.strong)
    except analysis.BudgetExceeded as e:
        print(str(e), file=sys.stderr)
        return INCOMPLETE
    _emit(ws.to_json())
    return OK


def cmd_verify(args) -> int:
    params = {
        name: getattr(args, name)
        for name in ("k", "p", "maxlen", "length", "max_index", "linear")
        if getattr(args, name) not in (None, False)
    }
    try:
        report = analysis.verify_theorem(args.theorem, **params)
    except analysis.UnknownTheorem:
        raise UsageError(f"unknown theorem {args.theorem!r}; known: {', '.join(analysis.THEOREMS)}") from None
    except TypeError as e:
        raise UsageError(f"bad parameters for {args.theorem}: {e}") from None
    _emit(report.to_json())
    return OK if report.passed else NO


# -- parser ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="powerdel", description="Deleting powers in words.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def word_command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--k", type=int, required=True, help="alphabet size")
        p.add_argument("--p", type=int, required=True, help="exponent")
        p.add_argument("word", help="the word ('-' for the empty word)")
        p.set_defaults(func=func)
        return p

    p = word_command("check", cmd_check, "deletability, strong deletability and residues")
    p.add_argument("--limit", type=int, default=deletion.DEFAULT_LIMIT)
    p.add_argument("--json", action="store_true")
    p = word_command("certificate", cmd_certificate, "a deletion sequence ending at the empty word")
    p.add_argument("--json", action="store_true")
    word_command("oracle", cmd_oracle, "closed-form verdict where one is known")

    p = sub.add_parser("gen", help="word generators")
    p.add_argument("family", choices=["squarefree", "fibonacci"])
    p.add_argument("--length", type=int)
    p.add_argument("--index", type=int)
    p.set_defaults(func=cmd_gen)

    g = sub.add_parser("grammar", help="indexed grammar tools")
    gsub = g.add_subparsers(dest="grammar_command", parser_class=_Parser)
    gsub.required = True
    b = gsub.add_parser("build")
    b.add_argument("kind", choices=["power", "square", "epsilon", "closure"])
    b.add_argument("--k", type=int, default=2)
    b.add_argument("--p", type=int, default=2)
    b.add_argument("--linear", action="store_true", help="linear indexed variant of the epsilon grammar")
    b.add_argument("--g1")
    b.add_argument("--g2")
    b.add_argument("--out")
    b.set_defaults(func=cmd_grammar_build)
    for name, func in (("enum", cmd_grammar_enum), ("member", cmd_grammar_member)):
        e = gsub.add_parser(name)
        e.add_argument("--grammar", required=True)
        e.add_argument("--maxlen", type=int, required=True)
        e.add_argument("--max-depth", type=int)
        e.add_argument("--max-steps", type=int, default=5_000_000)
        e.add_argument("--max-frontier", type=int, default=1_000_000)
        if name == "member":
            e.add_argument("word")
        e.set_defaults(func=func)

    p = sub.add_parser("insert", help="insertion of finite word sets")
    p.add_argument("--l1", required=True)
    p.add_argument("--l2", required=True)
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--star", action="store_true", help="iterate to the capped fixed point")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("mn-witness", help="pairwise-separated prefixes for D_{k,2}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--budget", type=int, default=deletion.DEFAULT_LIMIT)
    p.add_argument("--strong", action="store_true", help="separate with respect to SD_{k,2}")
    p.set_defaults(func=cmd_mn_witness)

    p = sub.add_parser("verify", help="run an exhaustive verification sweep")
    p.add_argument("theorem")
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--maxlen", type=int)
    p.add_argument("--length", type=int)
    p.add_argument("--max-index", dest="max_index", type=int)
    p.add_argument("--linear", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return USAGE
    except (AlphabetError, grammar.GrammarError, OSError, ValueError) as e:
        print(f"powerdel: {e}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())

"""Command line front end: normalisation, equality, classification, Munn
trees and verification campaigns.

Exit codes: 0 on success / "equal" / verified, 1 on "not-equal" or a
failed verification, 2 on usage or parse errors.  Stdout is byte-stable
for fixed arguments and inputs; timings go to stderr.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
import time
from dataclasses import dataclass

from .gsb import VerificationReport, verify_bounded
from .idempotents import IdempotentTree, classify, parse_idempotent
from .munn import munn_tree
from .rewrite import normal_form, normal_form_traced, reduce_once
from .words import (
    Alphabet,
    OrderSpec,
    SyntaxMode,
    Word,
    WordSyntaxError,
    format_word,
    parse_word,
    standard_alphabet,
)

ORACLE_WORD_CAP = 400_000


# ---------------------------------------------------------------------------
# configuration


@dataclass
class RunConfig:
    alphabet: Alphabet
    order: OrderSpec
    mode: SyntaxMode
    json: bool


def _infer_generators(texts: list[str], mode: SyntaxMode) -> list[str]:
    names: set[str] = set()
    for text in texts:
        if mode == "compact":
            names.update(ch.lower() for ch in text if ch.isalpha())
        else:
            names.update(tok.rstrip("'") for tok in text.split() if tok.rstrip("'"))
    return sorted(names)


def _resolve_config(args, texts: list[str]) -> RunConfig:
    mode: SyntaxMode = "verbose" if args.verbose_syntax else "compact"
    if args.alphabet:
        if mode == "compact":
            names = [ch for ch in args.alphabet if ch not in ", \t"]
        else:
            names = [t for t in re.split(r"[,\s]+", args.alphabet) if t]
        alphabet = Alphabet(names)
    else:
        names = _infer_generators(texts, mode)
        alphabet = Alphabet(names) if names else Alphabet(("a",))
    if args.order:
        ranking = parse_word(args.order, alphabet, mode)
        if set(ranking) != set(alphabet.letters()):
            raise WordSyntaxError(
                "order must rank every letter of the alphabet exactly once"
            )
        order = OrderSpec(ranking)
    else:
        order = alphabet.default_order()
    return RunConfig(alphabet, order, mode, args.json)


def _input_words(args, count: int = 1) -> list[list[str]]:
    """Word texts per work item: argv gives one item, --stdin one per line."""
    if args.stdin:
        items = []
        for line in sys.stdin.read().splitlines():
            if count == 1:
                items.append([line])
            else:
                parts = line.split("\t") if "\t" in line else line.split()
                if len(parts) != count:
                    raise WordSyntaxError(f"expected {count} words on line {line!r}")
                items.append(parts)
        return items
    texts = [getattr(args, name) for name in ("word", "left", "right") if hasattr(args, name)]
    texts = [t for t in texts if t is not None]
    if len(texts) != count:
        raise WordSyntaxError(f"expected {count} word argument(s); try --stdin for batch mode")
    return [texts]


# ---------------------------------------------------------------------------
# subcommands


def _cmd_normalize(args) -> int:
    items = _input_words(args, 1)
    cfg = _resolve_config(args, [t for item in items for t in item])
    batch = len(items) > 1 or args.stdin
    for (text,) in items:
        w = parse_word(text, cfg.alphabet, cfg.mode)
        if args.trace or cfg.json:
            trace = normal_form_traced(w, cfg.order)
            nf = trace.output
        else:
            trace = None
            nf = normal_form(w, cfg.order)
        if cfg.json:
            payload = {
                "input": format_word(w, cfg.mode),
                "normal_form": format_word(nf, cfg.mode),
                "steps": [
                    {
                        "position": s.position,
                        "rule": s.rule.kind,
                        "lhs": format_word(s.rule.lhs, cfg.mode),
                        "rhs": format_word(s.rule.rhs, cfg.mode),
                    }
                    for s in trace.steps
                ],
            }
            print(json.dumps(payload) if batch else json.dumps(payload, indent=2))
        else:
            if args.trace:
                for s in trace.steps:
                    print(
                        f"pos={s.position} rule={s.rule.kind} "
                        f"{format_word(s.rule.lhs, cfg.mode)} -> "
                        f"{format_word(s.rule.rhs, cfg.mode)}"
                    )
            print(format_word(nf, cfg.mode))
    return 0


def _cmd_eq(args) -> int:
    items = _input_words(args, 2)
    cfg = _resolve_config(args, [t for item in items for t in item])
    status = 0
    for left_text, right_text in items:
        u = parse_word(left_text, cfg.alphabet, cfg.mode)
        v = parse_word(right_text, cfg.alphabet, cfg.mode)
        nu, nv = normal_form(u, cfg.order), normal_form(v, cfg.order)
        same = nu == nv
        if cfg.json:
            print(
                json.dumps(
                    {
                        "equal": same,
                        "left_normal_form": format_word(nu, cfg.mode),
                        "right_normal_form": format_word(nv, cfg.mode),
                    }
                )
            )
        else:
            print("equal" if same else "not-equal")
        if not same:
            status = 1
    return status


def _tree_json(tree: IdempotentTree, mode: SyntaxMode) -> list:
    return [
        [format_word(f.flatten(), mode), _tree_json(f.inner, mode)]
        for f in tree.factors
    ]


def _print_tree(tree: IdempotentTree, mode: SyntaxMode, indent: int) -> None:
    for f in tree.factors:
        print(" " * indent + format_word(f.flatten(), mode))
        _print_tree(f.inner, mode, indent + 2)


def _cmd_classify(args) -> int:
    items = _input_words(args, 1)
    cfg = _resolve_config(args, [t for item in items for t in item])
    batch = len(items) > 1 or args.stdin
    for (text,) in items:
        w = parse_word(text, cfg.alphabet, cfg.mode)
        flags = classify(w, cfg.order)
        tree = parse_idempotent(w) if flags.is_idempotent else None
        if cfg.json:
            payload = {
                "idempotent": flags.is_idempotent,
                "canonical": flags.is_canonical,
                "prime": flags.is_prime,
                "ordered": flags.is_ordered,
                "factors": _tree_json(tree, cfg.mode) if tree is not None else None,
            }
            print(json.dumps(payload) if batch else json.dumps(payload, indent=2))
        else:
            print(f"word: {format_word(w, cfg.mode)}")
            print(f"idempotent: {'yes' if flags.is_idempotent else 'no'}")
            print(f"canonical: {'yes' if flags.is_canonical else 'no'}")
            print(f"prime: {'yes' if flags.is_prime else 'no'}")
            print(f"ordered: {'yes' if flags.is_ordered else 'no'}")
            if tree is not None and tree.factors:
                print("factors:")
                _print_tree(tree, cfg.mode, 2)
    return 0


def _cmd_munn(args) -> int:
    items = _input_words(args, 1)
    cfg = _resolve_config(args, [t for item in items for t in item])
    batch = len(items) > 1 or args.stdin

    def fmt(v: Word) -> str:
        return format_word(v, cfg.mode)

    for (text,) in items:
        w = parse_word(text, cfg.alphabet, cfg.mode)
        tree = munn_tree(w)
        edges = tree.edges()
        if cfg.json:
            payload = {
                "vertices": sorted(
                    (fmt(v) for v in tree.vertices), key=lambda s: (len(s), s)
                ),
                "edges": [[fmt(parent), fmt((letter,))] for parent, letter in edges],
                "start": "",
                "end": fmt(tree.end),
            }
            print(json.dumps(payload) if batch else json.dumps(payload, indent=2))
        else:

            def show(v: Word) -> str:
                return fmt(v) if v else "1"

            print(f"vertices: {len(tree.vertices)}")
            for parent, letter in edges:
                print(f"  {show(parent)} --{fmt((letter,))}--> {show(parent + (letter,))}")
            print("start: 1")
            print(f"end: {show(tree.end)}")
            print(f"minimal length: {tree.minimal_length()}")
    return 0


# ---------------------------------------------------------------------------
# verification campaigns


@dataclass
class OracleSweepReport:
    ngen: int
    max_len: int
    word_count: int = 0
    class_count: int = 0
    multi_nf_classes: int = 0
    cross_class_collisions: int = 0
    minimality_mismatches: int = 0
    non_least_normal_forms: int = 0
    key_mismatches: int = 0
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return (
            self.multi_nf_classes == 0
            and self.cross_class_collisions == 0
            and self.minimality_mismatches == 0
            and self.non_least_normal_forms == 0
            and self.key_mismatches == 0
        )


def oracle_words_total(ngen: int, max_len: int) -> int:
    return sum((2 * ngen) ** k for k in range(max_len + 1))


def oracle_agreement_report(ngen: int, max_len: int) -> OracleSweepReport:
    """Exhaustively compare engine normal forms with the Munn oracle.

    Every word of length <= max_len is normalised (sharing work along the
    deg-lex order) and grouped by oracle key.  A clean run has exactly
    one normal form per class, no normal form shared between classes,
    class-minimal lengths matching the tree formula, and each normal form
    equal to the deg-lex least member of its class.
    """
    from .munn import munn_key, munn_tree as _tree

    start = time.perf_counter()
    order = standard_alphabet(ngen).default_order()
    letters = order.ranking
    report = OracleSweepReport(ngen, max_len)

    nf_of: dict[Word, Word] = {}
    key_of: dict[Word, str] = {}
    # key -> [first member (deg-lex least), tree minimal length, {normal forms}]
    groups: dict[str, list] = {}
    for length in range(max_len + 1):
        for w in itertools.product(letters, repeat=length):
            nxt = reduce_once(w, order)
            nf = w if nxt is None else nf_of[nxt]
            nf_of[w] = nf
            k = munn_key(w)
            key_of[w] = k
            ent = groups.get(k)
            if ent is None:
                groups[k] = [w, _tree(w).minimal_length(), {nf}]
            else:
                ent[2].add(nf)
            report.word_count += 1

    report.class_count = len(groups)
    nf_owner: dict[Word, str] = {}
    for k, (first, formula_len, nfs) in groups.items():
        if len(nfs) > 1:
            report.multi_nf_classes += 1
        for nf in nfs:
            owner = nf_owner.get(nf)
            if owner is None:
                nf_owner[nf] = k
            elif owner != k:
                report.cross_class_collisions += 1
        nf = next(iter(nfs))
        if len(first) != formula_len or len(nf) != formula_len:
            report.minimality_mismatches += 1
        if nf != first:
            report.non_least_normal_forms += 1
        if key_of.get(nf) != k:
            report.key_mismatches += 1
    report.elapsed = time.perf_counter() - start
    return report


def _print_oracle_report(rep: OracleSweepReport, json_mode: bool) -> None:
    if json_mode:
        payload = {
            "generators": rep.ngen,
            "max_len": rep.max_len,
            "words": rep.word_count,
            "classes": rep.class_count,
            "multi_normal_form_classes": rep.multi_nf_classes,
            "cross_class_collisions": rep.cross_class_collisions,
            "minimality_mismatches": rep.minimality_mismatches,
            "non_least_normal_forms": rep.non_least_normal_forms,
            "key_mismatches": rep.key_mismatches,
            "ok": rep.ok,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"words: {rep.word_count}")
        print(f"classes: {rep.class_count}")
        print(f"multi-normal-form classes: {rep.multi_nf_classes}")
        print(f"cross-class collisions: {rep.cross_class_collisions}")
        print(f"minimality mismatches: {rep.minimality_mismatches}")
        print(f"non-least normal forms: {rep.non_least_normal_forms}")
        print(f"key mismatches: {rep.key_mismatches}")
        print(f"status: {'ok' if rep.ok else 'FAILED'}")
    print(f"elapsed: {rep.elapsed:.2f}s", file=sys.stderr)


def _print_gsb_report(rep: VerificationReport, json_mode: bool) -> None:
    if json_mode:
        payload = {
            "generators": rep.ngen,
            "max_lhs": rep.max_lhs,
            "max_ambiguity": rep.max_ambiguity,
            "rules": rep.rule_count,
            "rules_by_kind": rep.rules_by_kind,
            "compositions": rep.composition_count,
            "compositions_by_kind": rep.compositions_by_kind,
            "pair_counts": rep.pair_counts,
            "inclusion_pair_counts": rep.inclusion_pair_counts,
            "trivial": rep.trivial_count,
            "nontrivial": len(rep.nontrivial),
            "vacuous": rep.vacuous,
            "complete": rep.complete,
            "ok": rep.ok,
        }
        print(json.dumps(payload, indent=2))
    else:
        by_kind = rep.rules_by_kind
        print(f"rules: {rep.rule_count} (a: {by_kind.get('a', 0)}, b: {by_kind.get('b', 0)})")
        ck = rep.compositions_by_kind
        print(
            f"compositions: {rep.composition_count} "
            f"(intersection: {ck.get('intersection', 0)}, inclusion: {ck.get('inclusion', 0)})"
        )
        pairs = ", ".join(f"{k}: {v}" for k, v in sorted(rep.pair_counts.items()))
        print(f"by pair: {pairs if pairs else 'none'}")
        incl = ", ".join(f"{k}: {v}" for k, v in sorted(rep.inclusion_pair_counts.items()))
        print(f"inclusions by pair: {incl if incl else 'none'}")
        print(f"trivial: {rep.trivial_count}, non-trivial: {len(rep.nontrivial)}")
        flags = []
        if rep.vacuous:
            flags.append("vacuous")
        if not rep.complete:
            flags.append("incomplete")
        suffix = f" ({', '.join(flags)})" if flags else ""
        print(f"status: {'verified' if rep.ok else 'FAILED'}{suffix}")
    print(f"elapsed: {rep.elapsed:.2f}s", file=sys.stderr)


def _cmd_verify_gsb(args) -> int:
    order = None
    if args.order:
        alphabet = standard_alphabet(args.gens)
        mode: SyntaxMode = "verbose" if args.verbose_syntax else "compact"
        ranking = parse_word(args.order, alphabet, mode)
        if set(ranking) != set(alphabet.letters()):
            raise WordSyntaxError("order must rank every letter exactly once")
        order = OrderSpec(ranking)
    rep = verify_bounded(
        args.gens, args.max_lhs, args.max_ambiguity, order=order, budget=args.budget
    )
    _print_gsb_report(rep, args.json)
    return 0 if rep.ok else 1


def _cmd_verify_oracle(args) -> int:
    total = oracle_words_total(args.gens, args.max_len)
    if total > ORACLE_WORD_CAP:
        print(
            f"error: {total} words exceed the sweep cap of {ORACLE_WORD_CAP}; "
            f"try --gens 2 --max-len 8 or smaller",
            file=sys.stderr,
        )
        return 2
    rep = oracle_agreement_report(args.gens, args.max_len)
    _print_oracle_report(rep, args.json)
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", help="generator names (inferred from input when omitted)")
    common.add_argument("--order", help="letter ranking, written as a word listing every letter once")
    common.add_argument("--verbose-syntax", action="store_true", help="whitespace/apostrophe word syntax")
    common.add_argument("--json", action="store_true", help="machine readable output")

    top = argparse.ArgumentParser(
        prog="fisnorm",
        description="Unique shortest normal forms in free inverse monoids.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="rewrite a word to normal form")
    p.add_argument("word", nargs="?", help="input word")
    p.add_argument("--trace", action="store_true", help="print each rewriting step")
    p.add_argument("--stdin", action="store_true", help="read one word per line")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("eq", parents=[common], help="decide equality of two words")
    p.add_argument("left", nargs="?")
    p.add_argument("right", nargs="?")
    p.add_argument("--stdin", action="store_true", help="read one word pair per line")
    p.set_defaults(func=_cmd_eq)

    p = sub.add_parser("classify", parents=[common], help="idempotent taxonomy flags and factor tree")
    p.add_argument("word", nargs="?")
    p.add_argument("--stdin", action="store_true", help="read one word per line")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("munn", parents=[common], help="birooted word tree of a word")
    p.add_argument("word", nargs="?")
    p.add_argument("--stdin", action="store_true", help="read one word per line")
    p.set_defaults(func=_cmd_munn)

    verify = sub.add_parser("verify", help="verification campaigns")
    vsub = verify.add_subparsers(dest="target", required=True)

    p = vsub.add_parser("gsb", parents=[common], help="bounded confluence check of the rule schemas")
    p.add_argument("--gens", type=int, required=True)
    p.add_argument("--max-lhs", type=int, required=True)
    p.add_argument("--max-ambiguity", type=int, required=True)
    p.add_argument("--budget", type=int, help="cap on triviality checks (marks the run incomplete)")
    p.set_defaults(func=_cmd_verify_gsb)

    p = vsub.add_parser("oracle", parents=[common], help="exhaustive engine-vs-oracle agreement sweep")
    p.add_argument("--gens", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=_cmd_verify_oracle)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except WordSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

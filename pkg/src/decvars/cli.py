"""Command-line front end.

Exit codes: 0 success, 1 parse or usage error, 2 sequent not classically
valid, 3 a proof failed its checker.
"""

from __future__ import annotations

import argparse
import json
import sys

from .batch import batch_row, enumerate_sequents, row_dict
from .decide import decide_i, search_i
from .formula import ISequent, ParseError, Sequent, parse, parse_formula, parse_sequent, render, render_sequent
from .g3cp import CProof, ProofCheckError, check_c, search_c
from .g3ip import check_i
from .lemmas import LEMMA_ARITY, build_lemma
from .polarity import em_set, em_set_general, pi, polarity, polarity_multiset
from .proofio import proof_from_json, proof_to_json, render_ascii, render_latex
from .structural import eliminate_structural
from .translate import DELTA, GAMMA, translate_prop, translate_theorem

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_CHECK = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False))


def _emit_proof(proof, fmt: str, header: dict | None = None) -> None:
    header = header or {}
    if fmt == "json":
        _dump({**header, "proof": proof_to_json(proof)})
        return
    lines = [f"{k}: {json.dumps(v, ensure_ascii=False)}" for k, v in header.items()]
    prefix = "% " if fmt == "latex" else ""
    for line in lines:
        print(prefix + line)
    print(render_latex(proof) if fmt == "latex" else render_ascii(proof))


def _sequent(text: str) -> Sequent:
    return parse_sequent(text)


def _single(seq: Sequent):
    if len(seq.succ) != 1:
        raise _UsageError("this command needs exactly one succedent formula")
    return seq.ante, seq.succ[0]


def _vpi(V) -> dict:
    return {"V": sorted(V), "Pi": [render(f) for f in pi(V)]}


def cmd_polarity(args) -> int:
    obj = parse(args.input)
    if not isinstance(obj, Sequent):
        _dump(polarity(obj).as_dict())
        return EXIT_OK
    out = {"antecedent": polarity_multiset(obj.ante).as_dict(),
           "succedent": polarity_multiset(obj.succ).as_dict()}
    out.update(_vpi(em_set_general(obj.ante, (), obj.succ)))
    _dump(out)
    return EXIT_OK


def cmd_em_set(args) -> int:
    gamma, a = _single(_sequent(args.sequent))
    _dump(_vpi(em_set(gamma, a)))
    return EXIT_OK


def cmd_prove_c(args) -> int:
    seq = _sequent(args.sequent)
    found = search_c(seq)
    if not isinstance(found, CProof):
        print(f"not classically valid: {render_sequent(seq)}", file=sys.stderr)
        _dump({"valid": False, "countermodel": found.valuation})
        return EXIT_INVALID
    check_c(found)
    _emit_proof(found, args.format)
    return EXIT_OK


def cmd_prove_i(args) -> int:
    seq = parse_sequent(args.sequent, intuitionistic=True)
    if not decide_i(seq):
        _dump({"derivable": False})
        return EXIT_OK
    witness = search_i(seq)
    if witness is None:
        print("decision procedure and proof search disagree", file=sys.stderr)
        return EXIT_CHECK
    check_i(witness)
    _emit_proof(witness, args.format, {"derivable": True})
    return EXIT_OK


def _parse_tags(spec: str, n: int) -> list[str]:
    names = {"gamma": GAMMA, "delta": DELTA}
    parts = [t.strip().lower() for t in spec.split(",")]
    if any(t not in names for t in parts):
        raise _UsageError("tags must be 'gamma' or 'delta'")
    if len(parts) == 1:
        return [names[parts[0]]] * n
    if len(parts) != n:
        raise _UsageError(f"{len(parts)} tags given for {n} antecedent formulas")
    return [names[t] for t in parts]


def cmd_translate(args) -> int:
    seq = _sequent(args.sequent)
    found = search_c(seq)
    if not isinstance(found, CProof):
        print(f"not classically valid: {render_sequent(seq)}", file=sys.stderr)
        return EXIT_INVALID
    if args.tags is None:
        _, a = _single(seq)
        result = translate_theorem(found, eliminate=not args.keep_structural)
        V = result.V
        proof = result.proof if args.keep_structural else result.pure_proof
        expected = ISequent(pi(V) + seq.ante, a)
    else:
        tags = _parse_tags(args.tags, len(seq.ante))
        gamma = [f for f, t in zip(seq.ante, tags) if t == GAMMA]
        delta = [f for f, t in zip(seq.ante, tags) if t == DELTA]
        V = em_set_general(gamma, delta, seq.succ)
        proof = translate_prop(found, tags, V, checked=True)
        if not args.keep_structural:
            proof = eliminate_structural(proof)
        expected = None
    check_i(proof, allow_structural=args.keep_structural)
    if expected is not None and proof.conclusion != expected:
        print("translated proof has the wrong conclusion", file=sys.stderr)
        return EXIT_CHECK
    _emit_proof(proof, args.format, {"V": sorted(V)})
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        if args.file == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.file, encoding="utf-8") as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise _UsageError(f"cannot read proof: {e}") from None
    if isinstance(data, dict) and "proof" in data and "rule" not in data:
        data = data["proof"]
    proof = proof_from_json(data)
    if isinstance(proof, CProof):
        check_c(proof)
    else:
        check_i(proof, allow_structural=args.allow_structural)
    _dump({"ok": True, "system": data["system"], "conclusion": render_sequent(proof.conclusion)})
    return EXIT_OK


def cmd_lemma(args) -> int:
    try:
        index = int(args.id)
    except ValueError:
        raise _UsageError(f"lemma id must be 1-9, got {args.id!r}") from None
    if index not in LEMMA_ARITY:
        raise _UsageError(f"lemma id must be 1-9, got {index}")
    params = _formula_list(args.params)
    context = _formula_list(args.context)
    if len(params) != len(LEMMA_ARITY[index]):
        raise _UsageError(f"lemma {index} takes {len(LEMMA_ARITY[index])} parameter(s): "
                          f"{', '.join(LEMMA_ARITY[index]) or 'none'}")
    try:
        proof = build_lemma(index, *params, context=tuple(context))
    except ValueError as e:
        raise _UsageError(str(e)) from None
    check_i(proof, allow_structural=True)
    _emit_proof(proof, args.format)
    return EXIT_OK


def _formula_list(text: str | None) -> list:
    if not text:
        return []
    return [parse_formula(part, allow_star=True) for part in text.split(",")]


def cmd_batch(args) -> int:
    atom_names = [a.strip() for a in args.atoms.split(",") if a.strip()]
    for name in atom_names:
        parse_formula(name)
    if not atom_names:
        raise _UsageError("--atoms needs at least one atom")
    if args.max_weight < 2:
        raise _UsageError("--max-weight must be at least 2")
    seqs = enumerate_sequents(atom_names, args.max_weight, args.max_ante)
    total = valid = bad = 0
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        pool = ProcessPoolExecutor(args.jobs)
        rows = pool.map(batch_row, seqs, chunksize=64)
    else:
        pool = None
        rows = map(batch_row, seqs)
    try:
        for row in rows:
            total += 1
            if row.valid:
                valid += 1
                if row.check != "ok" or row.oracle != "ok":
                    bad += 1
            _dump(row_dict(row))
    finally:
        if pool is not None:
            pool.shutdown()
    print(f"{total} sequents, {valid} classically valid, {bad} failures", file=sys.stderr)
    return EXIT_CHECK if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="decvars", description="Classical sequents, excluded-middle sets and "
                                            "intuitionistic proof translation.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    formats = ("json", "ascii", "latex")

    s = sub.add_parser("polarity", help="polarity sets of a formula, or of a sequent with V")
    s.add_argument("input")
    s.set_defaults(func=cmd_polarity)

    s = sub.add_parser("em-set", help="excluded-middle set V and Pi_V of a sequent")
    s.add_argument("sequent")
    s.set_defaults(func=cmd_em_set)

    s = sub.add_parser("prove-c", help="classical proof or countermodel")
    s.add_argument("sequent")
    s.add_argument("--format", choices=formats, default="ascii")
    s.set_defaults(func=cmd_prove_c)

    s = sub.add_parser("prove-i", help="intuitionistic derivability with a witness proof")
    s.add_argument("sequent")
    s.add_argument("--format", choices=formats, default="ascii")
    s.set_defaults(func=cmd_prove_i)

    s = sub.add_parser("translate", help="intuitionistic proof of Pi_V, G => A")
    s.add_argument("sequent")
    s.add_argument("--keep-structural", action="store_true",
                   help="print the proof with LW, LC and Cut nodes")
    s.add_argument("--format", choices=formats, default="ascii")
    s.add_argument("--tags", help="gamma or delta for every antecedent formula, or a comma "
                                  "list with one tag each; selects the *-level translation")
    s.set_defaults(func=cmd_translate)

    s = sub.add_parser("check", help="check a proof in JSON form ('-' reads stdin)")
    s.add_argument("file")
    s.add_argument("--allow-structural", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("lemma", help="instantiate one of the nine double-negation schemas")
    s.add_argument("id")
    s.add_argument("--params", default="", help="comma-separated formulas ('*' allowed)")
    s.add_argument("--context", default="", help="side formulas for schemas 1 and 2")
    s.add_argument("--format", choices=formats, default="json")
    s.set_defaults(func=cmd_lemma)

    s = sub.add_parser("batch", help="translate every sequent of a bounded enumeration")
    s.add_argument("--atoms", default="p,q")
    s.add_argument("--max-weight", type=int, default=8)
    s.add_argument("--max-ante", type=int, default=2)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_batch)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, _UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ProofCheckError as e:
        print(f"check failed: {e}", file=sys.stderr)
        return EXIT_CHECK
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

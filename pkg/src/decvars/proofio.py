"""JSON interchange and text renderings for proof trees.

A node is ``{"system", "rule", "conclusion": {"ante", "succ"}, "principal"?,
"cut_formula"?, "premises"}`` with formulas in the ASCII grammar.  The
antecedent (and a classical succedent) is written in sorted order.
"""

from __future__ import annotations

from .formula import ISequent, Sequent, parse_formula, render, render_sequent
from .g3cp import CLASSICAL_RULES, CProof
from .g3ip import INT_RULES, IProof

__all__ = ["proof_to_json", "proof_from_json", "render_ascii", "render_latex"]

_SYSTEMS = {"g3cp": CLASSICAL_RULES, "g3ip": INT_RULES}


def _sorted(formulas) -> list[str]:
    return sorted(render(f) for f in formulas)


def proof_to_json(proof: CProof | IProof) -> dict:
    classical = isinstance(proof, CProof)
    c = proof.conclusion
    node = {
        "system": "g3cp" if classical else "g3ip",
        "rule": proof.rule,
        "conclusion": {"ante": _sorted(c.ante),
                       "succ": _sorted(c.succ) if classical else render(c.succ)},
    }
    if proof.principal is not None:
        node["principal"] = render(proof.principal)
    if not classical and proof.cut_formula is not None:
        node["cut_formula"] = render(proof.cut_formula)
    node["premises"] = [proof_to_json(q) for q in proof.premises]
    return node


def proof_from_json(data: dict) -> CProof | IProof:
    """Rebuild a proof tree; raises ValueError on malformed input (schema errors
    are left to the checkers)."""
    try:
        system = data["system"]
        rule = data["rule"]
        concl = data["conclusion"]
        premises = data.get("premises", [])
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed proof node: missing {e}") from None
    if system not in _SYSTEMS:
        raise ValueError(f"unknown proof system {system!r}")
    if not isinstance(premises, list):
        raise ValueError("premises must be a list")

    def formula(text):
        if not isinstance(text, str):
            raise ValueError(f"formula expected, got {text!r}")
        return parse_formula(text, allow_star=True)

    ante = tuple(formula(t) for t in concl.get("ante", []))
    subs = tuple(proof_from_json(q) for q in premises)
    principal = formula(data["principal"]) if data.get("principal") is not None else None
    if system == "g3cp":
        succ = concl.get("succ", [])
        if not isinstance(succ, list):
            raise ValueError("classical succedent must be a list")
        if any(isinstance(q, IProof) for q in subs):
            raise ValueError("g3cp node with a g3ip premise")
        return CProof(Sequent(ante, tuple(formula(t) for t in succ)), rule, principal, subs)
    succ = concl.get("succ")
    if isinstance(succ, list):
        if len(succ) != 1:
            raise ValueError("intuitionistic succedent must be a single formula")
        succ = succ[0]
    if any(isinstance(q, CProof) for q in subs):
        raise ValueError("g3ip node with a g3cp premise")
    cut_formula = formula(data["cut_formula"]) if data.get("cut_formula") is not None else None
    return IProof(ISequent(ante, formula(succ)), rule, principal, subs, cut_formula)


def render_ascii(proof: CProof | IProof) -> str:
    """Indented tree, conclusion first; premises indented below their rule."""
    lines: list[str] = []
    stack = [(proof, 0)]
    while stack:
        node, depth = stack.pop()
        extra = ""
        if getattr(node, "cut_formula", None) is not None:
            extra = f"  [cut {render(node.cut_formula)}]"
        lines.append(f"{'  ' * depth}{node.rule}: {render_sequent(node.conclusion)}{extra}")
        stack.extend((q, depth + 1) for q in reversed(node.premises))
    return "\n".join(lines)


_INF = {0: "\\UnaryInfC", 1: "\\UnaryInfC", 2: "\\BinaryInfC"}


def render_latex(proof: CProof | IProof) -> str:
    """A ``prooftree`` environment for the bussproofs package."""
    out = ["\\begin{prooftree}"]

    def emit(node):
        for q in node.premises:
            emit(q)
        if not node.premises:
            out.append("\\AxiomC{}")
        label = node.rule.replace("_", "\\_")
        out.append(f"\\RightLabel{{\\scriptsize {label}}}")
        out.append(f"{_INF[len(node.premises)]}{{${render_sequent(node.conclusion, 'latex')}$}}")

    emit(proof)
    out.append("\\end{prooftree}")
    return "\n".join(out)

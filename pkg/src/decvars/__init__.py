"""Classical sequents, excluded-middle variable sets and their intuitionistic proofs.

A classical G3cp proof of ``G => A`` is turned into a checked G3ip proof of
``Pi_V, G => A``, where ``Pi_V`` holds ``p | ~p`` only for the variables in
``V = (V-(G) | V+(A)) & (V+ns(G) | V-(A))``.
"""

from .formula import (
    BOT, STAR, And, Atom, Bot, Formula, Imp, ISequent, Or, ParseError, Sequent, Star,
    neg, neg_star, parse, parse_formula, parse_sequent, render, render_sequent, subst_star, weight,
)
from .polarity import PolarityReport, em_set, em_set_general, pi, polarity, polarity_multiset
from .g3cp import CProof, Countermodel, ProofCheckError, check_c, search_c, taut_oracle
from .g3ip import IProof, check_i, cut, cut_shared, identity_proof, weaken
from .structural import contract, eliminate_structural
from .decide import decide_i, search_i
from .lemmas import (
    build_lemma, curry_star, dne_star, lemma_schema, star_refute, subst_star_proof, uncurry_star,
)
from .translate import (
    DELTA, GAMMA, NotApplicable, TranslationResult, corollary_check, translate_prop, translate_theorem,
)
from .batch import batch, batch_row, enumerate_sequents
from .proofio import proof_from_json, proof_to_json, render_ascii, render_latex

__all__ = [
    "And",
    "Atom",
    "BOT",
    "Bot",
    "CProof",
    "Countermodel",
    "DELTA",
    "Formula",
    "GAMMA",
    "IProof",
    "ISequent",
    "Imp",
    "NotApplicable",
    "Or",
    "ParseError",
    "PolarityReport",
    "ProofCheckError",
    "STAR",
    "Sequent",
    "Star",
    "TranslationResult",
    "batch",
    "batch_row",
    "build_lemma",
    "check_c",
    "check_i",
    "contract",
    "corollary_check",
    "curry_star",
    "cut",
    "cut_shared",
    "decide_i",
    "dne_star",
    "eliminate_structural",
    "em_set",
    "em_set_general",
    "enumerate_sequents",
    "identity_proof",
    "lemma_schema",
    "neg",
    "neg_star",
    "parse",
    "parse_formula",
    "parse_sequent",
    "pi",
    "polarity",
    "polarity_multiset",
    "proof_from_json",
    "proof_to_json",
    "render",
    "render_ascii",
    "render_latex",
    "render_sequent",
    "search_c",
    "search_i",
    "star_refute",
    "subst_star",
    "subst_star_proof",
    "taut_oracle",
    "translate_prop",
    "translate_theorem",
    "uncurry_star",
    "weaken",
    "weight",
]

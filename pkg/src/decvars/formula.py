"""Propositional formulas, sequents, parsing and printing.

Formulas are immutable trees over atoms, the placeholder letter ``*``,
falsum and the binary connectives ``&``, ``|`` and ``->``.  Negation is
not a constructor: ``~A`` is read as ``A -> bot``.
"""

from __future__ import annotations

import re
import weakref
from collections import Counter
from typing import Iterable

__all__ = [
    "Formula", "Atom", "Star", "Bot", "And", "Or", "Imp", "STAR", "BOT",
    "neg", "neg_star", "Sequent", "ISequent", "ParseError",
    "parse", "parse_formula", "parse_sequent", "render", "render_sequent",
    "subst_star", "weight", "atoms", "contains_star",
    "remove_one", "multiset_eq", "is_submultiset", "multiset_minus", "sort_key",
]


class Formula:
    """Base class of the formula tree.

    Formulas are hash-consed: structurally equal formulas are the same
    object, so equality and hashing are identity based.
    """

    __slots__ = ("__weakref__",)

    def __str__(self) -> str:
        return render(self)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


_TABLE: "weakref.WeakValueDictionary" = weakref.WeakValueDictionary()


class Atom(Formula):
    __slots__ = ("name",)

    def __new__(cls, name: str):
        key = (cls, name)
        obj = _TABLE.get(key)
        if obj is None:
            if not isinstance(name, str) or not name or name == "*":
                raise ValueError(f"invalid atom name {name!r}")
            obj = object.__new__(cls)
            object.__setattr__(obj, "name", name)
            _TABLE[key] = obj
        return obj

    def __repr__(self):
        return f"Atom({self.name!r})"

    def __reduce__(self):
        return (Atom, (self.name,))


class _Constant(Formula):
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls.__dict__.get("_instance") is None:
            cls._instance = object.__new__(cls)
        return cls._instance

    def __repr__(self):
        return f"{type(self).__name__}()"

    def __reduce__(self):
        return (type(self), ())


class Star(_Constant):
    __slots__ = ()


class Bot(_Constant):
    __slots__ = ()


class _Binary(Formula):
    __slots__ = ("left", "right")

    def __new__(cls, left: Formula, right: Formula):
        key = (cls, left, right)
        obj = _TABLE.get(key)
        if obj is None:
            if not (isinstance(left, Formula) and isinstance(right, Formula)):
                raise TypeError("connectives take formulas")
            obj = object.__new__(cls)
            object.__setattr__(obj, "left", left)
            object.__setattr__(obj, "right", right)
            _TABLE[key] = obj
        return obj

    def __repr__(self):
        return f"{type(self).__name__}({self.left!r}, {self.right!r})"

    def __reduce__(self):
        return (type(self), (self.left, self.right))


class And(_Binary):
    __slots__ = ()


class Or(_Binary):
    __slots__ = ()


class Imp(_Binary):
    __slots__ = ()


STAR = Star()
BOT = Bot()


def neg(a: Formula) -> Formula:
    """``~a``, i.e. ``a -> bot``."""
    return Imp(a, BOT)


def neg_star(a: Formula) -> Formula:
    """``a -> *``."""
    return Imp(a, STAR)


# -- multisets ---------------------------------------------------------------

def remove_one(items: tuple, f: Formula) -> tuple:
    """Drop a single occurrence of ``f``; raises ValueError if absent."""
    i = items.index(f)
    return items[:i] + items[i + 1:]


def _canon(items) -> tuple:
    # formulas are interned, so sorting by identity gives a canonical multiset form
    return tuple(sorted(items, key=id))


def multiset_eq(a: Iterable, b: Iterable) -> bool:
    return _canon(a) == _canon(b)


def is_submultiset(a: Iterable, b: Iterable) -> bool:
    ca, cb = Counter(a), Counter(b)
    return all(cb[k] >= n for k, n in ca.items())


def multiset_minus(a: Iterable, b: Iterable) -> tuple:
    """``a - b`` as multisets, keeping the order of ``a``; ``b`` must be contained in ``a``."""
    out = list(a)
    for f in b:
        out.remove(f)
    return tuple(out)


def sort_key(f: Formula) -> tuple:
    # canonical order used for serialization
    return (weight(f), render(f))


# -- sequents ----------------------------------------------------------------

class _SequentBase:
    __slots__ = ("ante", "succ", "_k")

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self is other or self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __reduce__(self):
        return (type(self), (self.ante, self.succ))

    def __str__(self):
        return render_sequent(self)

    def __repr__(self):
        return f"{type(self).__name__}(ante={self.ante!r}, succ={self.succ!r})"

    def _key(self):
        k = self._k
        if k is None:
            k = self._compute_key()
            object.__setattr__(self, "_k", k)
        return k


class Sequent(_SequentBase):
    """Classical sequent: multiset antecedent, multiset succedent."""

    __slots__ = ()

    def __init__(self, ante, succ):
        object.__setattr__(self, "ante", tuple(ante))
        object.__setattr__(self, "succ", tuple(succ))
        object.__setattr__(self, "_k", None)

    def _compute_key(self):
        return (_canon(self.ante), _canon(self.succ))

    @property
    def weight(self) -> int:
        return sum(map(weight, self.ante)) + sum(map(weight, self.succ))


class ISequent(_SequentBase):
    """Intuitionistic sequent: multiset antecedent, exactly one succedent."""

    __slots__ = ()

    def __init__(self, ante, succ):
        if not isinstance(succ, Formula):
            raise TypeError("intuitionistic succedent must be a single formula")
        object.__setattr__(self, "ante", ante if type(ante) is tuple else tuple(ante))
        object.__setattr__(self, "succ", succ)
        object.__setattr__(self, "_k", None)

    def _compute_key(self):
        return (_canon(self.ante), self.succ)

    @property
    def weight(self) -> int:
        return sum(map(weight, self.ante)) + weight(self.succ)


# -- structural helpers ------------------------------------------------------

def weight(f: Formula) -> int:
    if isinstance(f, _Binary):
        return 1 + weight(f.left) + weight(f.right)
    return 1


def atoms(f: Formula | Iterable[Formula]) -> set[str]:
    """Names of the propositional variables occurring in ``f`` (or in each formula of an iterable)."""
    if not isinstance(f, Formula):
        out: set[str] = set()
        for g in f:
            out |= atoms(g)
        return out
    if isinstance(f, Atom):
        return {f.name}
    if isinstance(f, _Binary):
        return atoms(f.left) | atoms(f.right)
    return set()


def contains_star(f: Formula) -> bool:
    if isinstance(f, Star):
        return True
    if isinstance(f, _Binary):
        return contains_star(f.left) or contains_star(f.right)
    return False


def subst_star(f: Formula, c: Formula) -> Formula:
    """Replace every ``*`` leaf of ``f`` by ``c``."""
    if isinstance(f, Star):
        return c
    if isinstance(f, _Binary):
        left, right = subst_star(f.left, c), subst_star(f.right, c)
        if left is f.left and right is f.right:
            return f
        return type(f)(left, right)
    return f


# -- parsing -----------------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_ALIASES = {"∧": "&", "∨": "|", "→": "->", "¬": "~", "⊥": "bot", "⇒": "=>"}

_TOKEN = re.compile(
    r"\s*(?:(?P<iff><->|↔)|(?P<seq>=>|⇒)|(?P<imp>->|→)|(?P<op>[&|~(),*∧∨¬])|(?P<bot>⊥)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*))"
)
_ATOM_NAME = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        start = m.start(m.lastindex)
        if m.group("iff"):
            raise ParseError("'<->' is not a connective of this language", start)
        tok = m.group(m.lastindex)
        tokens.append((_ALIASES.get(tok, tok), start))
        pos = m.end()
    tokens.append(("", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, allow_star: bool):
        self.tokens = _tokenize(text)
        self.i = 0
        self.allow_star = allow_star

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def pos(self) -> int:
        return self.tokens[self.i][1]

    def take(self, expected: str | None = None) -> str:
        tok, pos = self.tokens[self.i]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok or 'end of input'!r}", pos)
        self.i += 1
        return tok

    def imp(self) -> Formula:
        left = self.disj()
        if self.peek() == "->":
            self.take()
            return Imp(left, self.imp())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek() == "|":
            self.take()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok, pos = self.tokens[self.i]
        if tok == "~":
            self.take()
            return neg(self.unary())
        if tok == "(":
            self.take()
            f = self.imp()
            self.take(")")
            return f
        if tok == "*":
            if not self.allow_star:
                raise ParseError("'*' is reserved and cannot be used as an atom", pos)
            self.take()
            return STAR
        if tok == "bot":
            self.take()
            return BOT
        if tok and (tok[0].isalpha() or tok[0] == "_"):
            if not _ATOM_NAME.match(tok):
                raise ParseError(f"invalid atom name {tok!r}", pos)
            self.take()
            return Atom(tok)
        raise ParseError(f"unexpected {tok or 'end of input'!r}", pos)

    def formula_list(self) -> list[Formula]:
        if self.peek() in ("=>", ""):
            return []
        out = [self.imp()]
        while self.peek() == ",":
            self.take()
            out.append(self.imp())
        return out

    def top(self):
        first = self.formula_list()
        if self.peek() == "=>":
            self.take()
            second = self.formula_list()
            self.take("")
            return Sequent(first, second)
        self.take("")
        if len(first) != 1:
            raise ParseError("expected a single formula or a sequent", 0)
        return first[0]


def parse(text: str, *, allow_star: bool = False, intuitionistic: bool = False):
    """Parse a formula or a sequent.

    Returns a ``Formula`` when ``text`` has no ``=>``; otherwise a classical
    ``Sequent``, or an ``ISequent`` when ``intuitionistic`` is set.
    """
    result = _Parser(text, allow_star).top()
    if intuitionistic and isinstance(result, Sequent):
        if len(result.succ) != 1:
            raise ParseError("intuitionistic sequent needs exactly one succedent formula",
                             text.find("=>"))
        return ISequent(result.ante, result.succ[0])
    return result


def parse_formula(text: str, *, allow_star: bool = False) -> Formula:
    f = parse(text, allow_star=allow_star)
    if not isinstance(f, Formula):
        raise ParseError("expected a formula, found a sequent", 0)
    return f


def parse_sequent(text: str, *, allow_star: bool = False, intuitionistic: bool = False):
    s = parse(text, allow_star=allow_star, intuitionistic=intuitionistic)
    if isinstance(s, Formula):
        s = Sequent((), (s,)) if not intuitionistic else ISequent((), s)
    return s


# -- printing ----------------------------------------------------------------

_IMP, _OR, _AND, _UNARY = 1, 2, 3, 4

_SYMBOLS = {
    "ascii": {"and": " & ", "or": " | ", "imp": " -> ", "neg": "~", "bot": "bot",
              "star": "*", "seq": " => ", "lp": "(", "rp": ")"},
    "latex": {"and": " \\land ", "or": " \\lor ", "imp": " \\to ", "neg": "\\neg ",
              "bot": "\\bot", "star": "\\ast", "seq": " \\Rightarrow ", "lp": "(", "rp": ")"},
    "unicode": {"and": " ∧ ", "or": " ∨ ", "imp": " → ", "neg": "¬", "bot": "⊥",
                "star": "∗", "seq": " ⇒ ", "lp": "(", "rp": ")"},
}


def render(f: Formula, style: str = "ascii") -> str:
    """Print ``f``; ``A -> bot`` is printed as ``~A``.  ``style`` is ascii, latex or unicode."""
    sym = _SYMBOLS[style]

    def go(g: Formula, need: int) -> str:
        if isinstance(g, Atom):
            return g.name
        if isinstance(g, Bot):
            return sym["bot"]
        if isinstance(g, Star):
            return sym["star"]
        if isinstance(g, Imp) and isinstance(g.right, Bot):
            text, level = sym["neg"] + go(g.left, _UNARY), _UNARY
        elif isinstance(g, Imp):
            text, level = go(g.left, _OR) + sym["imp"] + go(g.right, _IMP), _IMP
        elif isinstance(g, Or):
            text, level = go(g.left, _OR) + sym["or"] + go(g.right, _AND), _OR
        else:
            text, level = go(g.left, _AND) + sym["and"] + go(g.right, _UNARY), _AND
        return sym["lp"] + text + sym["rp"] if level < need else text

    return go(f, _IMP)


def render_sequent(s: Sequent | ISequent, style: str = "ascii") -> str:
    sym = _SYMBOLS[style]
    ante = ", ".join(render(f, style) for f in s.ante)
    succ_items = s.succ if isinstance(s, Sequent) else (s.succ,)
    succ = ", ".join(render(f, style) for f in succ_items)
    return (ante + sym["seq"] + succ).strip()


"""Clopen subsets of the infinite-word space over a finite alphabet.

A clopen set is a finite union of cylinders, one cylinder per finite
word.  The canonical form is the reduced prefix antichain: no word is a
proper prefix of another, no node keeps its complete family of children,
and words are sorted shortlex in alphabet order.  The empty set of words
is the bottom and the singleton {empty word} is the top.

Alphabets are strings of distinct symbols.  A one-symbol alphabet is
permitted but degenerate: the word space is a single point and the
algebra collapses to {bottom, top}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import AlphabetMismatchError, ForeignSymbolError, ParseError


def _check_alphabet(alphabet: str) -> None:
    if not alphabet:
        raise ValueError("alphabet must not be empty")
    if len(set(alphabet)) != len(alphabet):
        raise ValueError(f"alphabet {alphabet!r} repeats a symbol")


def is_degenerate_alphabet(alphabet: str) -> bool:
    _check_alphabet(alphabet)
    return len(alphabet) == 1


def _check_word(alphabet: str, word: str) -> None:
    foreign = set(word) - set(alphabet)
    if foreign:
        raise ForeignSymbolError(
            f"word {word!r} uses symbols {sorted(foreign)} outside alphabet {alphabet!r}")


def _shortlex_key(alphabet: str):
    rank = {c: i for i, c in enumerate(alphabet)}
    return lambda w: (len(w), tuple(rank[c] for c in w))


@dataclass(frozen=True)
class PrefixClopen:
    """A clopen set in reduced prefix antichain form.

    Construct through normalize, top, bottom or the operations; the
    constructor only verifies that the invariants already hold.
    """

    alphabet: str
    words: tuple[str, ...]

    def __post_init__(self) -> None:
        _check_alphabet(self.alphabet)
        seen = set(self.words)
        if len(seen) != len(self.words):
            raise ValueError("duplicate words")
        for w in self.words:
            _check_word(self.alphabet, w)
            for cut in range(len(w)):
                if w[:cut] in seen:
                    raise ValueError(f"{w[:cut]!r} is a proper prefix of {w!r}")
        parents = {w[:-1] for w in self.words if w}
        for p in parents:
            if all(p + s in seen for s in self.alphabet):
                raise ValueError(f"complete sibling family under {p!r} not collapsed")
        if list(self.words) != sorted(self.words, key=_shortlex_key(self.alphabet)):
            raise ValueError("words not in shortlex order")

    def is_bottom(self) -> bool:
        return not self.words

    def is_top(self) -> bool:
        return self.words == ("",)

    def __and__(self, other: "PrefixClopen") -> "PrefixClopen":
        return meet(self, other)

    def __or__(self, other: "PrefixClopen") -> "PrefixClopen":
        return join(self, other)

    def __invert__(self) -> "PrefixClopen":
        return complement(self)

    def render(self) -> str:
        """Frozen output form: '-' for bottom, '^' for top, else the words."""
        if self.is_bottom():
            return "-"
        if self.is_top():
            return "^"
        return " ".join(self.words)


def bottom(alphabet: str) -> PrefixClopen:
    _check_alphabet(alphabet)
    return PrefixClopen(alphabet, ())


def top(alphabet: str) -> PrefixClopen:
    _check_alphabet(alphabet)
    return PrefixClopen(alphabet, ("",))


def normalize(alphabet: str, words: Iterable[str]) -> PrefixClopen:
    """Canonical reduced prefix antichain for a set of cylinder words.

    Words with a proper prefix already present are absorbed, complete
    sibling families collapse into their parent repeatedly, and the
    result is sorted shortlex.  This preserves the covered point set.
    """
    _check_alphabet(alphabet)
    pool = set()
    for w in words:
        _check_word(alphabet, w)
        pool.add(w)
    kept = {w for w in pool
            if not any(w[:cut] in pool for cut in range(len(w)))}
    changed = True
    while changed:
        changed = False
        for p in {w[:-1] for w in kept if w}:
            family = {p + s for s in alphabet}
            if family <= kept:
                kept -= family
                kept.add(p)
                changed = True
    return PrefixClopen(alphabet, tuple(sorted(kept, key=_shortlex_key(alphabet))))


def _same_alphabet(P: PrefixClopen, Q: PrefixClopen) -> None:
    if P.alphabet != Q.alphabet:
        raise AlphabetMismatchError(f"{P.alphabet!r} vs {Q.alphabet!r}")


def join(P: PrefixClopen, Q: PrefixClopen) -> PrefixClopen:
    """Union of the covered point sets."""
    _same_alphabet(P, Q)
    return normalize(P.alphabet, P.words + Q.words)


def meet(P: PrefixClopen, Q: PrefixClopen) -> PrefixClopen:
    """Intersection: of each comparable word pair the longer one survives."""
    _same_alphabet(P, Q)
    out = []
    for u in P.words:
        for v in Q.words:
            if u.startswith(v):
                out.append(u)
            elif v.startswith(u):
                out.append(v)
    return normalize(P.alphabet, out)


def complement(P: PrefixClopen) -> PrefixClopen:
    """Set complement inside the whole word space.

    Recursive descent over the symbol tree: a node covered by P emits
    nothing, a node disjoint from P emits itself, and a node above some
    word of P splits into its children.
    """
    have = set(P.words)

    def walk(u: str) -> list[str]:
        if any(u[:cut] in have for cut in range(len(u) + 1)):
            return []
        if not any(w.startswith(u) for w in have):
            return [u]
        out: list[str] = []
        for s in P.alphabet:
            out.extend(walk(u + s))
        return out

    return normalize(P.alphabet, walk(""))


def leq(P: PrefixClopen, Q: PrefixClopen) -> bool:
    """Containment of covered point sets."""
    return meet(P, Q) == P


def kappa_word(alphabet: str, word: str) -> PrefixClopen:
    """The cylinder of a single finite word."""
    return normalize(alphabet, [word])


def is_single_cylinder_complemented(alphabet: str, word: str) -> bool:
    """Is the complement of this cylinder itself a cylinder or a bound?

    True iff the complement normalizes to zero words (bottom or, for the
    degenerate one-symbol alphabet, anything) or exactly one word.
    """
    return len(complement(kappa_word(alphabet, word)).words) <= 1


@dataclass(frozen=True)
class UPWord:
    """An ultimately periodic infinite word: preperiod then period forever."""

    preperiod: str
    period: str

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("period must be non-empty")

    def expand(self, n: int) -> str:
        if n <= len(self.preperiod):
            return self.preperiod[:n]
        reps = (n - len(self.preperiod)) // len(self.period) + 1
        return (self.preperiod + self.period * reps)[:n]


def membership(P: PrefixClopen, w: UPWord) -> bool:
    """Does the infinite word land in the covered point set?

    Exact: expand far enough to compare against the longest word of P.
    """
    _check_word(P.alphabet, w.preperiod)
    _check_word(P.alphabet, w.period)
    horizon = max((len(x) for x in P.words), default=0)
    prefix = w.expand(horizon)
    return any(prefix.startswith(x) for x in P.words)


def filter_prefixes(w: UPWord, k: int) -> list[str]:
    """The k shortest finite prefixes of the infinite word, shortest first."""
    if k < 0:
        raise ValueError("k must be non-negative")
    full = w.expand(max(k - 1, 0))
    return [full[:i] for i in range(k)]


# Expression surface.  Grammar, loosest binding last:
#   expr   := term ('|' term)*
#   term   := factor ('&' factor)*
#   factor := '!' factor | '(' expr ')' | atom
# Atoms are words over the alphabet, TOP or '^' for the top, BOT or '-'
# for the bottom.  The reserved atom spellings make rendered output
# round-trip through the parser.

_SPECIAL = set("&|!()")


def _tokenize(alphabet: str, text: str) -> list[str]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in _SPECIAL:
            tokens.append(c)
            i += 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in _SPECIAL:
                j += 1
            tokens.append(text[i:j])
            i = j
    return tokens


def eval_expr(alphabet: str, text: str) -> PrefixClopen:
    """Evaluate a clopen expression to canonical form.

    '!' binds tightest, then '&', then '|'; parentheses group.
    """
    _check_alphabet(alphabet)
    tokens = _tokenize(alphabet, text)
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def take() -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of expression")
        pos += 1
        return tokens[pos - 1]

    def parse_expr() -> PrefixClopen:
        acc = parse_term()
        while peek() == "|":
            take()
            acc = join(acc, parse_term())
        return acc

    def parse_term() -> PrefixClopen:
        acc = parse_factor()
        while peek() == "&":
            take()
            acc = meet(acc, parse_factor())
        return acc

    def parse_factor() -> PrefixClopen:
        tok = take()
        if tok == "!":
            return complement(parse_factor())
        if tok == "(":
            inner = parse_expr()
            if peek() != ")":
                raise ParseError("missing closing parenthesis")
            take()
            return inner
        if tok in (")", "&", "|"):
            raise ParseError(f"unexpected {tok!r}")
        if tok in ("TOP", "^"):
            return top(alphabet)
        if tok in ("BOT", "-"):
            return bottom(alphabet)
        return kappa_word(alphabet, tok)

    if not tokens:
        raise ParseError("empty expression")
    result = parse_expr()
    if pos != len(tokens):
        raise ParseError(f"trailing input from {tokens[pos]!r}")
    return result

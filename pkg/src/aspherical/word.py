"""Freely reduced words in a finite generating set.

Words are the common currency for relators and vanishing cycles.  A word
is stored as a sequence of signed letters over a fixed alphabet and is
kept freely reduced at all times (no adjacent x x^-1 pair).  The text
grammar, shared by relator files and the CLI, is

    word    := "1" | factor+
    factor  := ident power? | "[" word "," word "]" power? | "(" word ")" power?
    power   := "^" signed-integer
    ident   := [a-z][a-z0-9_]*

with factors separated by whitespace or "*".  Commutator brackets are
sugar: [u,v] denotes u v u^-1 v^-1.  The identity word renders as "1".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

_IDENT_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


class WordSyntaxError(ValueError):
    """Malformed word text; `position` is the character offset."""

    def __init__(self, position: int, message: str):
        super().__init__(f"at position {position}: {message}")
        self.position = position


class UnknownGenerator(ValueError):
    def __init__(self, name: str):
        super().__init__(f"unknown generator {name!r}")
        self.name = name


class AlphabetMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    """A named generator.  Names follow the ident grammar above."""

    name: str

    def __post_init__(self):
        if not _IDENT_RE.match(self.name):
            raise ValueError(f"invalid generator name {self.name!r}")


@dataclass(frozen=True)
class Word:
    """A freely reduced word: letters are (generator index, sign) pairs."""

    alphabet: tuple[Generator, ...]
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = len(self.alphabet)
        for k, (i, s) in enumerate(self.letters):
            if not 0 <= i < n:
                raise ValueError(f"letter {k} references generator {i} of {n}")
            if s not in (1, -1):
                raise ValueError(f"letter {k} has sign {s}")
            if k and self.letters[k - 1] == (i, -s):
                raise ValueError("word is not freely reduced")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def render(self) -> str:
        return render_word(self)


def _free_reduce(letters: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for i, s in letters:
        if out and out[-1] == (i, -s):
            out.pop()
        else:
            out.append((i, s))
    return tuple(out)


def word_from_letters(
    alphabet: Sequence[Generator], letters: Iterable[tuple[int, int]]
) -> Word:
    """Build a word, freely reducing the given letters."""
    return Word(tuple(alphabet), _free_reduce(letters))


def empty_word(alphabet: Sequence[Generator]) -> Word:
    return Word(tuple(alphabet), ())


def generator_word(alphabet: Sequence[Generator], index: int, sign: int = 1) -> Word:
    return Word(tuple(alphabet), ((index, sign),))


def multiply(u: Word, v: Word) -> Word:
    """Freely reduced concatenation.  Both factors must share an alphabet."""
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch("cannot multiply words over different alphabets")
    return Word(u.alphabet, _free_reduce(u.letters + v.letters))


def invert(w: Word) -> Word:
    return Word(w.alphabet, tuple((i, -s) for i, s in reversed(w.letters)))


def commutator(u: Word, v: Word) -> Word:
    """The word u v u^-1 v^-1."""
    return multiply(multiply(u, v), multiply(invert(u), invert(v)))


def cyclic_reduce(w: Word) -> Word:
    """Strip mutually inverse first/last letters until none remain."""
    letters = list(w.letters)
    while len(letters) >= 2 and letters[0] == (letters[-1][0], -letters[-1][1]):
        letters = letters[1:-1]
    return Word(w.alphabet, tuple(letters))


def exponent_sum(w: Word, g: Generator) -> int:
    """Signed count of occurrences of g in w."""
    try:
        idx = w.alphabet.index(g)
    except ValueError:
        raise UnknownGenerator(g.name) from None
    return sum(s for i, s in w.letters if i == idx)


def exponent_vector(w: Word) -> tuple[int, ...]:
    """Exponent sums of w over its whole alphabet, in alphabet order."""
    vec = [0] * len(w.alphabet)
    for i, s in w.letters:
        vec[i] += s
    return tuple(vec)


def render_word(w: Word) -> str:
    """Render with runs collapsed into powers; the identity is "1"."""
    if not w.letters:
        return "1"
    parts: list[str] = []
    run_idx, run_sign, run_len = w.letters[0][0], w.letters[0][1], 1
    for i, s in w.letters[1:]:
        if i == run_idx and s == run_sign:
            run_len += 1
        else:
            parts.append(_render_run(w.alphabet, run_idx, run_sign * run_len))
            run_idx, run_sign, run_len = i, s, 1
    parts.append(_render_run(w.alphabet, run_idx, run_sign * run_len))
    return " ".join(parts)


def _render_run(alphabet: tuple[Generator, ...], idx: int, exponent: int) -> str:
    name = alphabet[idx].name
    return name if exponent == 1 else f"{name}^{exponent}"


# --- parser ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<ident>[a-z][a-z0-9_]*)
      | (?P<number>\d+)
      | (?P<sym>[\[\](),^*+-])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise WordSyntaxError(pos, f"unexpected character {text[pos]!r}")
        if m.lastgroup != "ws":
            kind = m.lastgroup if m.lastgroup != "sym" else m.group()
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


# Hard ceiling on letters a single parse may materialize: powers and
# nested commutators multiply lengths, and an unbounded expansion turns a
# short input into a denial of service.  Far above any realistic relator.
_MAX_PARSED_LETTERS = 1 << 18


class _Parser:
    def __init__(self, text: str, alphabet: tuple[Generator, ...]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.alphabet = alphabet
        self.index = {g.name: i for i, g in enumerate(alphabet)}

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            raise WordSyntaxError(tok[2], f"expected {kind}, found {tok[1] or 'end of input'!r}")
        self.pos += 1
        return tok

    def parse_word(self, closers: tuple[str, ...]) -> list[tuple[int, int]]:
        kind, value, at = self.peek()
        if kind == "number" and value == "1" and self.tokens[self.pos + 1][0] in closers:
            self.pos += 1
            return []
        letters = self.parse_factor()
        while True:
            kind, value, at = self.peek()
            if kind == "*":
                self.pos += 1
                letters += self.parse_factor()
            elif kind in ("ident", "[", "("):
                letters += self.parse_factor()
            elif kind in closers:
                return letters
            else:
                raise WordSyntaxError(at, f"unexpected {value!r}")

    def parse_factor(self) -> list[tuple[int, int]]:
        kind, value, at = self.peek()
        if kind == "ident":
            self.pos += 1
            idx = self.index.get(value)
            if idx is None:
                raise UnknownGenerator(value)
            base = [(idx, 1)]
        elif kind == "[":
            self.pos += 1
            u = self.parse_word(closers=(",",))
            self.take(",")
            v = self.parse_word(closers=("]",))
            self.take("]")
            if 2 * (len(u) + len(v)) > _MAX_PARSED_LETTERS:
                raise WordSyntaxError(at, "word expansion too large")
            base = u + v + _inv(u) + _inv(v)
        elif kind == "(":
            self.pos += 1
            base = self.parse_word(closers=(")",))
            self.take(")")
        else:
            raise WordSyntaxError(at, f"expected a factor, found {value or 'end of input'!r}")
        if self.peek()[0] == "^":
            self.pos += 1
            exponent = self.parse_exponent()
            if len(base) * abs(exponent) > _MAX_PARSED_LETTERS:
                raise WordSyntaxError(at, "word expansion too large")
            base = _power(base, exponent)
        return base

    def parse_exponent(self) -> int:
        kind, value, at = self.peek()
        sign = 1
        if kind in ("+", "-"):
            sign = -1 if kind == "-" else 1
            self.pos += 1
        tok = self.take("number")
        return sign * int(tok[1])


def _inv(letters: list[tuple[int, int]]) -> list[tuple[int, int]]:
    return [(i, -s) for i, s in reversed(letters)]


def _power(letters: list[tuple[int, int]], n: int) -> list[tuple[int, int]]:
    if n < 0:
        letters, n = _inv(letters), -n
    return letters * n


def parse_word(text: str, alphabet: Sequence[Generator]) -> Word:
    """Parse `text` over `alphabet`; see the module docstring for the grammar."""
    parser = _Parser(text, tuple(alphabet))
    letters = parser.parse_word(closers=("end",))
    parser.take("end")
    return Word(tuple(alphabet), _free_reduce(letters))

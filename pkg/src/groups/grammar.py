"""Recursive-descent parser for the word notation.

    word    := term*
    term    := atom ("^" exponent)?
    exponent:= integer | "{" integer "}"
    atom    := generator | "1" | "[" word "," word "]" | "(" word ")"
    integer := "-"? digit+

Whitespace is ignored. `[u,v]` expands to u v u^-1 v^-1.
"""

import re

from src.errors import WordSyntaxError
from src.groups.words import EMPTY, GENERATOR_NAMES, Word, commutator, multiply

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<gen>[a-z])|(?P<sym>[\[\](),^{}]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise WordSyntaxError(f"Unexpected character {text[bad]!r}", bad, text)
        kind = m.lastgroup
        value = m.group(kind)
        tokens.append((kind, value, m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, generator_count: int):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0
        self.generator_count = generator_count

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def advance(self) -> tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, symbol: str) -> None:
        kind, value, pos = self.advance()
        if kind != "sym" or value != symbol:
            found = value or "end of input"
            raise WordSyntaxError(f"Expected {symbol!r}, found {found!r}", pos, self.text)

    def word(self) -> Word:
        result = EMPTY
        while True:
            kind, value, _ = self.peek()
            if kind == "end" or (kind == "sym" and value in "],)"):
                return result
            result = multiply(result, self.term())

    def term(self) -> Word:
        base = self.atom()
        kind, value, _ = self.peek()
        if kind == "sym" and value == "^":
            self.advance()
            return base ** self.exponent()
        return base

    def exponent(self) -> int:
        kind, value, pos = self.peek()
        if kind == "sym" and value == "{":
            self.advance()
            n = self.integer()
            self.expect("}")
            return n
        return self.integer()

    def integer(self) -> int:
        kind, value, pos = self.advance()
        if kind != "int":
            raise WordSyntaxError(f"Expected an integer exponent, found {value or 'end of input'!r}", pos, self.text)
        return int(value)

    def atom(self) -> Word:
        kind, value, pos = self.advance()
        if kind == "gen":
            if value not in GENERATOR_NAMES[: self.generator_count]:
                raise WordSyntaxError(f"Unknown generator {value!r}", pos, self.text)
            return Word.generator(GENERATOR_NAMES.index(value) + 1)
        if kind == "int":
            if value != "1":
                raise WordSyntaxError(f"Integer {value!r} is not a word", pos, self.text)
            return EMPTY
        if kind == "sym" and value == "[":
            u = self.word()
            self.expect(",")
            v = self.word()
            self.expect("]")
            return commutator(u, v)
        if kind == "sym" and value == "(":
            inner = self.word()
            self.expect(")")
            return inner
        raise WordSyntaxError(f"Unexpected {value or 'end of input'!r}", pos, self.text)


def parse_word(text: str, generator_count: int = 2) -> Word:
    """Parse `text` into a freely reduced word.

    Args:
        text: Word in the bracket notation, e.g. "[x,[x,y^-1]]^2 y [y^-1,x] y^-1".
        generator_count: How many generators (x, y, z, ...) are allowed.

    Returns:
        The reduced Word denoted by `text`.

    Raises:
        WordSyntaxError: On malformed input, with the offending position.
    """
    parser = _Parser(text, generator_count)
    result = parser.word()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise WordSyntaxError(f"Unexpected {value!r}", pos, text)
    return result

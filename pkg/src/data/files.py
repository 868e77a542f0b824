"""Line-oriented text formats for presentations, move scripts and certificates.

Presentation:
    generators: x y
    relator: [x,y]
    relator: 1

Move script, one move per line:
    mult j i | invert j | conj j <word> | auto <word for x> ; <word for y> | stab | destab

Certificate, one step per line:
    <+|-> <relator index> <conjugator>

Blank lines and `#` comments are ignored everywhere. Indices are 1-based.
"""

import logging
from pathlib import Path
from typing import Iterable, Iterator, Union

from src.certificates.certificate import Certificate, CertificateStep
from src.errors import FileFormatError, WindlabError
from src.groups.grammar import parse_word
from src.groups.words import GENERATOR_NAMES, generator_name
from src.presentations.endomorphisms import Endomorphism
from src.presentations.moves import Automorph, Conjugate, Destabilize, Invert, Move, Mult, Stabilize
from src.presentations.presentation import Presentation

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _read(path: PathLike) -> str:
    p = Path(path)
    text = p.read_text()
    logger.info(f"Loaded {p}")
    return text


def _int(token: str, number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FileFormatError(f"Expected an integer, got {token!r}", number) from None


# --- presentations ---------------------------------------------------------


def parse_presentation(text: str) -> Presentation:
    """Read the `generators:` / `relator:` format.

    Raises:
        FileFormatError: On unknown keys, a missing generators line or a bad relator.
    """
    generator_count = None
    relators = []
    for number, line in _content_lines(text):
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep:
            raise FileFormatError(f"Expected 'key: value', got {line!r}", number)
        if key == "generators":
            names = value.split()
            if tuple(names) != GENERATOR_NAMES[: len(names)] or not names:
                raise FileFormatError(
                    f"Generators must be a prefix of {' '.join(GENERATOR_NAMES)}, got {value.strip()!r}", number
                )
            generator_count = len(names)
        elif key == "relator":
            if generator_count is None:
                raise FileFormatError("relator before generators", number)
            try:
                relators.append(parse_word(value, generator_count))
            except WindlabError as e:
                raise FileFormatError(str(e), number) from e
        else:
            raise FileFormatError(f"Unknown key {key!r}", number)
    if generator_count is None:
        raise FileFormatError("Missing 'generators:' line", 0)
    return Presentation(generator_count, tuple(relators))


def format_presentation(P: Presentation) -> str:
    lines = ["generators: " + " ".join(generator_name(i) for i in range(1, P.generator_count + 1))]
    lines += [f"relator: {r}" for r in P.relators]
    return "\n".join(lines) + "\n"


def load_presentation(path: PathLike) -> Presentation:
    try:
        return parse_presentation(_read(path))
    except FileFormatError as e:
        raise FileFormatError(e.message, e.line, str(path)) from e


def save_presentation(P: Presentation, path: PathLike) -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(format_presentation(P))
    logger.info(f"Presentation saved to {p}")


# --- move scripts ----------------------------------------------------------


def parse_move(line: str, generator_count: int = 2, number: int = 0) -> Move:
    """One script line as a Move."""
    op, _, rest = line.strip().partition(" ")
    args = rest.split()
    try:
        if op == "mult" and len(args) == 2:
            return Mult(_int(args[0], number), _int(args[1], number))
        if op == "invert" and len(args) == 1:
            return Invert(_int(args[0], number))
        if op == "conj" and len(args) >= 2:
            index, _, word = rest.strip().partition(" ")
            return Conjugate(_int(index, number), parse_word(word, generator_count))
        if op == "auto" and ";" in rest:
            wx, _, wy = rest.partition(";")
            return Automorph(Endomorphism(parse_word(wx), parse_word(wy)))
        if op == "stab" and not args:
            return Stabilize()
        if op == "destab" and not args:
            return Destabilize()
    except FileFormatError:
        raise
    except WindlabError as e:
        raise FileFormatError(str(e), number) from e
    raise FileFormatError(f"Cannot read move {line.strip()!r}", number)


def parse_script(text: str, generator_count: int = 2) -> list[Move]:
    """All moves of a script. Word arguments may use the generators added by
    earlier `stab` lines."""
    moves = []
    for number, line in _content_lines(text):
        move = parse_move(line, generator_count, number)
        if isinstance(move, Stabilize):
            generator_count += 1
        elif isinstance(move, Destabilize):
            generator_count = max(generator_count - 1, 1)
        moves.append(move)
    return moves


def format_script(script: Iterable[Move]) -> str:
    return "".join(f"{m}\n" for m in script)


def load_script(path: PathLike, generator_count: int = 2) -> list[Move]:
    return parse_script(_read(path), generator_count)


# --- certificates ----------------------------------------------------------


def parse_certificate(text: str) -> Certificate:
    """Read `<sign> <index> <conjugator>` lines; a missing conjugator means the empty word."""
    steps = []
    for number, line in _content_lines(text):
        parts = line.split(None, 2)
        if len(parts) < 2 or parts[0] not in ("+", "-"):
            raise FileFormatError(f"Expected '<+|-> <index> <conjugator>', got {line!r}", number)
        sign = 1 if parts[0] == "+" else -1
        index = _int(parts[1], number)
        try:
            conjugator = parse_word(parts[2]) if len(parts) == 3 else parse_word("1")
            steps.append(CertificateStep(conjugator, index, sign))
        except WindlabError as e:
            raise FileFormatError(str(e), number) from e
    return Certificate(tuple(steps))


def format_certificate(c: Certificate) -> str:
    return "".join(f"{step}\n" for step in c.steps)


def load_certificate(path: PathLike) -> Certificate:
    text = _read(path)
    if not text.strip():
        logger.warning(f"{path} holds no certificate steps")
    return parse_certificate(text)


def save_certificate(c: Certificate, path: PathLike, header: str = "") -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    comment = "".join(f"# {line}\n" for line in header.splitlines())
    p.write_text(comment + format_certificate(c))
    logger.info(f"Certificate saved to {p}")

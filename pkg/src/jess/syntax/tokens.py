"""Lexer for the supported Java subset.

Produces a flat token stream with byte offsets and 1-based line numbers.
Comments and whitespace are skipped; they survive only inside verbatim
member spans. `>` is always lexed as a single token so that generic type
argument lists never collide with shift operators."""

from __future__ import annotations

from dataclasses import dataclass

IDENT = "ident"
KEYWORD = "keyword"
NUMBER = "number"
STRING = "string"
CHAR = "char"
OP = "op"
EOF = "eof"

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while""".split()
)

PRIMITIVES = frozenset(
    {"boolean", "byte", "short", "int", "long", "char", "float", "double"}
)

MODIFIER_KEYWORDS = frozenset(
    """public protected private static final abstract native synchronized
    transient volatile strictfp default""".split()
)

# Longest match first.  `>` combinations are intentionally absent.
_OPERATORS = [
    ">>>=", "<<=", ">>=", "...", "->", "::", "==", "!=", "<=", ">=", "&&",
    "||", "++", "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<",
    "+", "-", "*", "/", "%", "=", "<", ">", "!", "~", "?", ":", ";", ",",
    ".", "(", ")", "[", "]", "{", "}", "&", "|", "^", "@",
]
_OPERATORS = [op for op in _OPERATORS if ">" not in op or op == ">"]
_OP_BY_FIRST: dict[str, list[str]] = {}
for _op in _OPERATORS:
    _OP_BY_FIRST.setdefault(_op[0], []).append(_op)
for _lst in _OP_BY_FIRST.values():
    _lst.sort(key=len, reverse=True)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    start: int  # byte offset
    end: int  # byte offset one past the token
    line: int  # 1-based

    def is_op(self, text: str) -> bool:
        return self.kind == OP and self.text == text

    def is_kw(self, text: str) -> bool:
        return self.kind == KEYWORD and self.text == text

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"Token({self.kind},{self.text!r}@{self.line})"


class LexError(Exception):
    def __init__(self, message, line, offset):
        super().__init__(message)
        self.message = message
        self.line = line
        self.offset = offset


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch in "_$"


def _is_ident_part(ch: str) -> bool:
    return ch.isalnum() or ch in "_$"


def lex(text: str) -> list[Token]:
    """Tokenize Java source text. Raises LexError on malformed literals."""
    tokens: list[Token] = []
    n = len(text)
    # Byte offsets equal char offsets for pure-ASCII sources; otherwise a
    # cumulative table maps char index to byte offset.
    if len(text.encode("utf-8")) == n:
        byte_at = None
    else:
        byte_at = [0] * (n + 1)
        acc = 0
        for idx, ch in enumerate(text):
            byte_at[idx] = acc
            acc += len(ch.encode("utf-8"))
        byte_at[n] = acc

    def boff(i: int) -> int:
        return i if byte_at is None else byte_at[i]

    i = 0
    line = 1
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            i += 1
            continue
        if ch in " \t\r\f":
            i += 1
            continue
        if ch == "/" and i + 1 < n:
            nxt = text[i + 1]
            if nxt == "/":
                j = text.find("\n", i)
                i = n if j < 0 else j
                continue
            if nxt == "*":
                j = text.find("*/", i + 2)
                if j < 0:
                    raise LexError("unterminated comment", line, boff(i))
                line += text.count("\n", i, j)
                i = j + 2
                continue
        if _is_ident_start(ch):
            j = i + 1
            while j < n and _is_ident_part(text[j]):
                j += 1
            word = text[i:j]
            kind = KEYWORD if word in KEYWORDS else IDENT
            tokens.append(Token(kind, word, boff(i), boff(j), line))
            i = j
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            j = _scan_number(text, i)
            tokens.append(Token(NUMBER, text[i:j], boff(i), boff(j), line))
            i = j
            continue
        if ch == '"':
            if text.startswith('"""', i):
                j = text.find('"""', i + 3)
                if j < 0:
                    raise LexError("unterminated text block", line, boff(i))
                j += 3
            else:
                j = _scan_string(text, i, '"', line)
            tokens.append(Token(STRING, text[i:j], boff(i), boff(j), line))
            line += text.count("\n", i, j)
            i = j
            continue
        if ch == "'":
            j = _scan_string(text, i, "'", line)
            tokens.append(Token(CHAR, text[i:j], boff(i), boff(j), line))
            i = j
            continue
        candidates = _OP_BY_FIRST.get(ch)
        if candidates:
            for op in candidates:
                if text.startswith(op, i):
                    j = i + len(op)
                    tokens.append(Token(OP, op, boff(i), boff(j), line))
                    i = j
                    break
            else:  # pragma: no cover - first char matched, 1-char op exists
                raise LexError(f"stray character {ch!r}", line, boff(i))
            continue
        raise LexError(f"unexpected character {ch!r}", line, boff(i))
    tokens.append(Token(EOF, "", boff(n), boff(n), line))
    return tokens


def _scan_number(text: str, i: int) -> int:
    n = len(text)
    j = i
    if text.startswith(("0x", "0X"), i):
        j = i + 2
        while j < n and (text[j] in "0123456789abcdefABCDEF_.pP" or text[j] in "+-" and text[j - 1] in "pP"):
            j += 1
    elif text.startswith(("0b", "0B"), i):
        j = i + 2
        while j < n and text[j] in "01_":
            j += 1
    else:
        while j < n and (text[j].isdigit() or text[j] == "_"):
            j += 1
        if j < n and text[j] == "." and (j + 1 >= n or text[j + 1] != "."):
            j += 1
            while j < n and (text[j].isdigit() or text[j] == "_"):
                j += 1
        if j < n and text[j] in "eE":
            k = j + 1
            if k < n and text[k] in "+-":
                k += 1
            if k < n and text[k].isdigit():
                j = k
                while j < n and (text[j].isdigit() or text[j] == "_"):
                    j += 1
    if j < n and text[j] in "lLfFdD":
        j += 1
    return j


def _scan_string(text: str, i: int, quote: str, line: int) -> int:
    n = len(text)
    j = i + 1
    while j < n:
        ch = text[j]
        if ch == "\\":
            j += 2
            continue
        if ch == quote:
            return j + 1
        if ch == "\n":
            break
        j += 1
    raise LexError("unterminated literal", line, i)

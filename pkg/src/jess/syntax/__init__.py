"""Java source lexing, parsing and re-printing for a defined language subset.

Member bodies are kept as token streams over exact source spans so that
untouched members can be re-emitted byte for byte."""

from jess.syntax.ast import (
    CompilationUnit,
    ImportDecl,
    JavaSyntaxError,
    MemberDecl,
    ParsedType,
    SourceSpan,
    TypeDecl,
    format_member_signature,
    parse_member_signature,
    structural_key,
)
from jess.syntax.parser import parse
from jess.syntax.printer import print_unit
from jess.syntax.tokens import Token, lex

__all__ = [
    "CompilationUnit",
    "ImportDecl",
    "JavaSyntaxError",
    "MemberDecl",
    "ParsedType",
    "SourceSpan",
    "Token",
    "TypeDecl",
    "format_member_signature",
    "lex",
    "members_overlapping",
    "parse",
    "parse_member_signature",
    "print_unit",
    "structural_key",
]


def members_overlapping(unit, lines):
    from jess.syntax.parser import members_overlapping as _impl

    return _impl(unit, lines)

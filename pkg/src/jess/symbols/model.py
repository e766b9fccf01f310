"""Reference and resolution records shared by the resolver and stub inference."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from jess.syntax.ast import CompilationUnit, MemberDecl, ParsedType, SourceSpan, TypeDecl

# Reference kinds
METHOD_CALL = "method_call"
FIELD_ACCESS = "field_access"
OBJECT_CREATION = "object_creation"
TYPE_USE = "type_use"
CAST = "cast"
CATCH_TYPE = "catch_type"
THROW = "throw"
FOREACH_ITERABLE = "foreach_iterable"
TRY_RESOURCE = "try_resource"
ANNOTATION_USE = "annotation_use"
SUPER_CTOR_CALL = "super_ctor_call"


@dataclass
class Reference:
    """One syntactic reference site, with enough context for stub inference.

    `receiver`, `args` and friends are token index ranges into the owning
    unit's token list.  `use` describes the value context of the whole
    expression this reference heads, e.g. ("decl_assign", ParsedType)."""

    kind: str
    name: str
    site: SourceSpan
    unit: CompilationUnit
    enclosing_type: TypeDecl
    enclosing_member: Optional[str]  # member signature, None for type headers
    receiver: Optional[tuple[int, int]] = None
    args: Optional[list[tuple[int, int]]] = None
    type: Optional[ParsedType] = None
    use: Optional[tuple] = None
    generic_args: Optional[list[ParsedType]] = None
    soft: bool = False
    assigned_expr: Optional[tuple[int, int]] = None
    castee: Optional[tuple[int, int]] = None
    member_decl: Optional[MemberDecl] = None
    site_tok: int = -1  # token index of the reference head

    def describe(self) -> str:
        recv = ""
        if self.receiver:
            recv = _range_text(self.unit, self.receiver) + "."
        return f"{self.kind} {recv}{self.name} at {self.site.file}:{self.site.start_line}"


def _range_text(unit: CompilationUnit, rng: tuple[int, int]) -> str:
    return " ".join(t.text for t in unit.tokens[rng[0] : rng[1]])


# Resolution outcomes


@dataclass
class Resolution:
    kind: str  # internal_member|internal_type|classpath|jdk|unresolved
    fqn: Optional[str] = None
    member: Optional[str] = None  # member signature or descriptor-ish key
    ref: Optional[Reference] = None
    member_decl: Optional[MemberDecl] = None
    return_type: Optional[ParsedType] = None

    @staticmethod
    def internal_member(sig: str, decl: MemberDecl, fqn: str):
        return Resolution(
            "internal_member", fqn=fqn, member=sig, member_decl=decl,
            return_type=decl.return_type if decl.kind == "method" else None,
        )

    @staticmethod
    def internal_type(fqn: str):
        return Resolution("internal_type", fqn=fqn)

    @staticmethod
    def classpath(fqn: str, member: Optional[str] = None):
        return Resolution("classpath", fqn=fqn, member=member)

    @staticmethod
    def jdk(fqn: str, member: Optional[str] = None):
        return Resolution("jdk", fqn=fqn, member=member)

    @staticmethod
    def unresolved(ref: Reference):
        return Resolution("unresolved", ref=ref)


@dataclass
class ScanBlock:
    """Lexical block inside a member body, for scoped definition lookup."""

    start: int  # token index range, [start, end)
    end: int
    parent: Optional["ScanBlock"] = None
    defs: dict = field(default_factory=dict)  # name -> (ParsedType|None, tok_index)

    def lookup(self, name: str, at: int):
        blk = self
        while blk is not None:
            hit = blk.defs.get(name)
            if hit is not None and hit[1] <= at:
                return hit
            blk = blk.parent
        return None


@dataclass
class ScanResult:
    refs: list[Reference]
    root: ScanBlock
    blocks: list[ScanBlock]

    def block_at(self, tok_index: int) -> ScanBlock:
        best = self.root
        for blk in self.blocks:
            if blk.start <= tok_index < blk.end:
                if blk.start >= best.start and blk.end <= best.end:
                    best = blk
        return best

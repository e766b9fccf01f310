"""AST model for the supported Java subset.

Nodes carry exact source spans so unmodified members can be re-emitted
verbatim.  Member bodies are stored as token index ranges into the unit's
token list, not as statement trees."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


class JavaSyntaxError(Exception):
    def __init__(self, file, line, message):
        super().__init__(f"{file}:{line}: {message}")
        self.file = file
        self.line = line
        self.message = message


@dataclass(frozen=True)
class SourceSpan:
    file: str
    start_offset: int
    end_offset: int
    start_line: int
    end_line: int

    def contains_line(self, line: int) -> bool:
        return self.start_line <= line <= self.end_line


@dataclass
class ParsedType:
    """A type as written in source: dotted base name, type arguments, dims."""

    name: str  # dotted, without type arguments
    type_args: list["ParsedType"] = field(default_factory=list)
    dims: int = 0
    varargs: bool = False
    wildcard: bool = False

    @property
    def is_primitive(self) -> bool:
        return self.name in {
            "boolean", "byte", "short", "int", "long", "char", "float",
            "double", "void",
        }

    @property
    def simple_name(self) -> str:
        return self.name.rsplit(".", 1)[-1]

    def erased(self) -> str:
        """Signature rendering: type arguments stripped, arrays kept."""
        dims = self.dims + (1 if self.varargs else 0)
        return self.name + "[]" * dims

    def written(self) -> str:
        out = self.name
        if self.type_args:
            out += "<" + ", ".join(a.written() for a in self.type_args) + ">"
        out += "[]" * self.dims
        if self.varargs:
            out += "..."
        return out

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"ParsedType({self.written()})"


@dataclass
class ImportDecl:
    path: str
    on_demand: bool = False
    static_import: bool = False
    span: Optional[SourceSpan] = None

    @property
    def last_segment(self) -> str:
        return self.path.rsplit(".", 1)[-1]

    def text(self) -> str:
        head = "import static " if self.static_import else "import "
        tail = ".*;" if self.on_demand else ";"
        return head + self.path + tail


@dataclass
class MemberDecl:
    kind: str  # method|constructor|field|initializer|nested_type|enum_constant
    name: str  # empty for initializers
    modifiers: list[str]
    annotations: list[str]  # annotation simple/dotted names as written
    span: SourceSpan
    signature: str = ""
    # methods / constructors
    type_parameters: list[str] = field(default_factory=list)
    type_param_bounds: list[ParsedType] = field(default_factory=list)
    return_type: Optional[ParsedType] = None
    parameters: list[tuple[ParsedType, str]] = field(default_factory=list)
    throws_list: list[ParsedType] = field(default_factory=list)
    body_span: Optional[SourceSpan] = None
    body_tokens: Optional[tuple[int, int]] = None  # [start, end) in unit.tokens
    # fields
    field_type: Optional[ParsedType] = None
    initializer_tokens: Optional[tuple[int, int]] = None
    type_prefix_span: Optional[tuple[int, int]] = None  # modifiers+type bytes
    declarator_dims: int = 0  # trailing `[]` dims written after the name
    declarator_first: bool = True
    # header portion: span start .. body/initializer start (for re-printing)
    header_end_offset: int = 0
    # nested types
    nested: Optional["TypeDecl"] = None
    # enum constants
    constant_args: Optional[tuple[int, int]] = None

    @property
    def is_static(self) -> bool:
        return "static" in self.modifiers

    @property
    def is_final(self) -> bool:
        return "final" in self.modifiers

    @property
    def is_abstract(self) -> bool:
        return "abstract" in self.modifiers


@dataclass
class TypeDecl:
    kind: str  # class|interface|enum|annotation
    name: str
    modifiers: list[str]
    annotations: list[str]
    type_parameters: list[str]
    extends_list: list[ParsedType]
    implements_list: list[ParsedType]
    members: list[MemberDecl]
    span: SourceSpan
    type_param_bounds: list[ParsedType] = field(default_factory=list)
    header_end_offset: int = 0  # offset of the opening brace
    binary_path: str = ""  # Outer$Inner path without package

    @property
    def is_interface(self) -> bool:
        return self.kind == "interface"

    @property
    def is_abstract(self) -> bool:
        return "abstract" in self.modifiers or self.kind == "interface"

    def nested_types(self):
        for m in self.members:
            if m.kind == "nested_type":
                yield m.nested


@dataclass
class CompilationUnit:
    file: str
    package_name: Optional[str]
    imports: list[ImportDecl]
    types: list[TypeDecl]
    source_text: bytes
    tokens: list = field(default_factory=list)
    package_annotations: list[str] = field(default_factory=list)

    def fqn(self, type_decl: TypeDecl) -> str:
        if self.package_name:
            return f"{self.package_name}.{type_decl.binary_path}"
        return type_decl.binary_path

    def all_types(self):
        stack = list(self.types)
        while stack:
            t = stack.pop(0)
            yield t
            stack[0:0] = list(t.nested_types())

    def span_bytes(self, span: SourceSpan) -> bytes:
        return self.source_text[span.start_offset : span.end_offset]


# --- member signatures ----------------------------------------------------
#
# Canonical grammar (CLI-facing):
#   methods/constructors:  FQN '#' name '(' type (',' type)* ')'
#   fields:                FQN '#' name
#   initializers:          FQN '#<clinit>'   (ordinal suffix for extras)
# Nested types join with '$'.  Parameter types are written-form names with
# type arguments stripped; varargs render as arrays.


def format_member_signature(owner_fqn: str, member: MemberDecl) -> str:
    if member.kind in ("method", "constructor"):
        name = "<init>" if member.kind == "constructor" else member.name
        params = ",".join(t.erased() for t, _ in member.parameters)
        return f"{owner_fqn}#{name}({params})"
    if member.kind == "initializer":
        return f"{owner_fqn}#{member.name or '<clinit>'}"
    if member.kind == "nested_type":
        simple = member.nested.name if member.nested else member.name
        return f"{owner_fqn}${simple}"
    return f"{owner_fqn}#{member.name}"


def parse_member_signature(text: str):
    """Split a canonical signature into (owner_fqn, name, param_types|None).

    param_types is None for fields/initializers and for bare type targets."""
    if "#" not in text:
        return text, None, None
    owner, rest = text.split("#", 1)
    if "(" in rest:
        if not rest.endswith(")"):
            raise ValueError(f"malformed member signature: {text!r}")
        name, params = rest[:-1].split("(", 1)
        types = [p.strip() for p in params.split(",") if p.strip()] if params else []
        return owner, name, types
    return owner, rest, None


# --- structural equality ---------------------------------------------------


def structural_key(node):
    """Span-independent shape of a unit/type/member, for round-trip checks."""
    if isinstance(node, CompilationUnit):
        return (
            node.package_name,
            tuple((i.path, i.on_demand, i.static_import) for i in node.imports),
            tuple(structural_key(t) for t in node.types),
        )
    if isinstance(node, TypeDecl):
        return (
            node.kind,
            node.name,
            tuple(sorted(node.modifiers)),
            tuple(node.annotations),
            tuple(node.type_parameters),
            tuple(t.written() for t in node.extends_list),
            tuple(t.written() for t in node.implements_list),
            tuple(structural_key(m) for m in node.members),
        )
    if isinstance(node, MemberDecl):
        if node.kind == "nested_type":
            return ("nested", structural_key(node.nested))
        return (
            node.kind,
            node.name,
            tuple(sorted(node.modifiers)),
            tuple(node.annotations),
            node.return_type.written() if node.return_type else None,
            tuple((t.written(), n) for t, n in node.parameters),
            tuple(t.written() for t in node.throws_list),
            node.field_type.written() if node.field_type else None,
            node.body_span is not None,
            node.initializer_tokens is not None,
        )
    raise TypeError(f"no structural key for {type(node)!r}")

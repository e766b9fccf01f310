"""Recursive-descent parser for the supported Java subset.

Supported: classes, interfaces, enums (constants and members), annotation
type declarations, nested/inner types, fields, methods, constructors,
static and instance initializers, single/on-demand/static imports, generics,
annotations.  Records, modules and sealed types are rejected.  Method and
initializer bodies are captured as token ranges, not statement trees."""

from __future__ import annotations

from jess.syntax.ast import (
    CompilationUnit,
    ImportDecl,
    JavaSyntaxError,
    MemberDecl,
    ParsedType,
    SourceSpan,
    TypeDecl,
    format_member_signature,
)
from jess.syntax.tokens import (
    EOF,
    IDENT,
    KEYWORD,
    MODIFIER_KEYWORDS,
    NUMBER,
    OP,
    PRIMITIVES,
    LexError,
    lex,
)

_TYPE_KEYWORDS = {"class", "interface", "enum"}

_OPEN = {"(": ")", "[": "]", "{": "}", "<": ">"}


def parse(source_text: bytes, file: str) -> CompilationUnit:
    """Parse UTF-8 Java source into a CompilationUnit."""
    try:
        text = source_text.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise JavaSyntaxError(file, 1, f"not valid UTF-8: {exc}") from None
    try:
        tokens = lex(text)
    except LexError as exc:
        raise JavaSyntaxError(file, exc.line, exc.message) from None
    return _Parser(tokens, source_text, file).compilation_unit()


class _Parser:
    def __init__(self, tokens, source_bytes, file):
        self.toks = tokens
        self.src = source_bytes
        self.file = file
        self.pos = 0

    # --- primitives ---------------------------------------------------

    def peek(self, ahead=0):
        i = self.pos + ahead
        return self.toks[i] if i < len(self.toks) else self.toks[-1]

    def next(self):
        tok = self.peek()
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def at(self, text, ahead=0):
        tok = self.peek(ahead)
        return tok.kind in (KEYWORD, OP) and tok.text == text

    def at_ident(self, ahead=0):
        return self.peek(ahead).kind == IDENT

    def accept(self, text):
        if self.at(text):
            return self.next()
        return None

    def expect(self, text):
        tok = self.peek()
        if not self.at(text):
            self.fail(f"expected {text!r}, found {tok.text!r}")
        return self.next()

    def expect_ident(self):
        tok = self.peek()
        if tok.kind != IDENT:
            self.fail(f"expected identifier, found {tok.text!r}")
        return self.next()

    def fail(self, message):
        raise JavaSyntaxError(self.file, self.peek().line, message)

    def span_between(self, start_tok, end_tok) -> SourceSpan:
        return SourceSpan(
            self.file, start_tok.start, end_tok.end, start_tok.line, end_tok.line
        )

    def skip_balanced(self, open_text):
        """Consume from the current opening bracket to its match, inclusive.
        Returns (start_index, end_index) as an exclusive token range."""
        start = self.pos
        close = _OPEN[open_text]
        self.expect(open_text)
        depth = 1
        while depth:
            tok = self.next()
            if tok.kind == EOF:
                self.fail(f"unbalanced {open_text!r}")
            if tok.kind == OP:
                if tok.text == open_text:
                    depth += 1
                elif tok.text == close:
                    depth -= 1
        return start, self.pos

    # --- compilation unit ----------------------------------------------

    def compilation_unit(self) -> CompilationUnit:
        package_annotations = []
        while self.at("@") and not self.at("interface", 1):
            package_annotations.append(self.annotation())
        package_name = None
        if self.at_ident() and self.peek().text == "module" or (
            self.at_ident() and self.peek().text == "open"
            and self.peek(1).kind == IDENT and self.peek(1).text == "module"
        ):
            self.fail("module declarations are not supported")
        if self.accept("package"):
            package_name = self.qualified_name()
            self.expect(";")
        imports = []
        while self.at("import"):
            start = self.next()
            static_import = bool(self.accept("static"))
            parts = [self.expect_ident().text]
            on_demand = False
            while self.accept("."):
                if self.accept("*"):
                    on_demand = True
                    break
                parts.append(self.expect_ident().text)
            end = self.expect(";")
            imports.append(
                ImportDecl(
                    path=".".join(parts),
                    on_demand=on_demand,
                    static_import=static_import,
                    span=self.span_between(start, end),
                )
            )
        types = []
        while self.peek().kind != EOF:
            if self.accept(";"):
                continue
            types.append(self.type_decl())
        unit = CompilationUnit(
            file=self.file,
            package_name=package_name,
            imports=imports,
            types=types,
            source_text=self.src,
            tokens=self.toks,
            package_annotations=package_annotations,
        )
        for t in types:
            _assign_paths(unit, t, t.name)
        return unit

    def qualified_name(self) -> str:
        parts = [self.expect_ident().text]
        while self.at(".") and self.peek(1).kind == IDENT:
            self.next()
            parts.append(self.next().text)
        return ".".join(parts)

    def annotation(self) -> str:
        self.expect("@")
        name = self.qualified_name()
        if self.at("("):
            self.skip_balanced("(")
        return name

    def modifiers_and_annotations(self):
        mods, annos = [], []
        while True:
            tok = self.peek()
            if tok.kind == OP and tok.text == "@" and not self.at("interface", 1):
                annos.append(self.annotation())
            elif tok.kind == KEYWORD and tok.text in MODIFIER_KEYWORDS:
                mods.append(self.next().text)
            elif tok.kind == IDENT and tok.text == "sealed":
                self.fail("sealed types are not supported")
            elif (
                tok.kind == IDENT
                and tok.text == "non"
                and self.peek(1).kind == OP
                and self.peek(1).text == "-"
                and self.peek(2).text == "sealed"
            ):
                self.fail("sealed types are not supported")
            else:
                return mods, annos

    # --- types -----------------------------------------------------------

    def type_decl(self) -> TypeDecl:
        start = self.peek()
        mods, annos = self.modifiers_and_annotations()
        if self.at("@") and self.at("interface", 1):
            self.next()
            self.next()
            return self.finish_type("annotation", start, mods, annos)
        tok = self.peek()
        if tok.kind == KEYWORD and tok.text in _TYPE_KEYWORDS:
            self.next()
            return self.finish_type(tok.text, start, mods, annos)
        if tok.kind == IDENT and tok.text == "record" and self.peek(1).kind == IDENT:
            self.fail("record declarations are not supported")
        self.fail(f"expected type declaration, found {tok.text!r}")

    def finish_type(self, kind, start_tok, mods, annos) -> TypeDecl:
        name = self.expect_ident().text
        type_params, bounds = [], []
        if self.at("<"):
            type_params, bounds = self.type_parameters()
        extends_list, implements_list = [], []
        if self.accept("extends"):
            extends_list.append(self.parse_type())
            while self.accept(","):
                extends_list.append(self.parse_type())
        if self.accept("implements"):
            implements_list.append(self.parse_type())
            while self.accept(","):
                implements_list.append(self.parse_type())
        if kind == "class" and len(extends_list) > 1:
            self.fail("classes extend a single class")
        brace = self.peek()
        header_end = brace.start
        if kind == "enum":
            members = self.enum_body(name)
        else:
            members = self.type_body(name)
        end_tok = self.toks[self.pos - 1]
        return TypeDecl(
            kind=kind,
            name=name,
            modifiers=mods,
            annotations=annos,
            type_parameters=type_params,
            extends_list=extends_list,
            implements_list=implements_list,
            members=members,
            span=self.span_between(start_tok, end_tok),
            header_end_offset=header_end,
            type_param_bounds=bounds,
        )

    def type_parameters(self):
        names, bounds = [], []
        self.expect("<")
        while True:
            while self.at("@"):
                self.annotation()
            names.append(self.expect_ident().text)
            if self.accept("extends"):
                bounds.append(self.parse_type())
                while self.accept("&"):
                    bounds.append(self.parse_type())
            if self.accept(","):
                continue
            self.expect(">")
            return names, bounds

    def parse_type(self) -> ParsedType:
        while self.at("@"):
            self.annotation()
        tok = self.peek()
        if tok.kind == KEYWORD and (tok.text in PRIMITIVES or tok.text == "void"):
            self.next()
            t = ParsedType(name=tok.text)
        else:
            if self.at("?"):
                self.next()
                t = ParsedType(name="?", wildcard=True)
                if self.accept("extends") or self.accept("super"):
                    inner = self.parse_type()
                    t.type_args = [inner]
                return t
            parts = [self.expect_ident().text]
            targs = []
            if self.at("<"):
                targs = self.type_arguments()
            while self.at(".") and self.peek(1).kind == IDENT:
                self.next()
                parts.append(self.next().text)
                if self.at("<"):
                    targs = self.type_arguments()
            t = ParsedType(name=".".join(parts), type_args=targs)
        while self.at("[") and self.at("]", 1):
            self.next()
            self.next()
            t.dims += 1
        return t

    def type_arguments(self) -> list[ParsedType]:
        self.expect("<")
        if self.accept(">"):
            return []
        args = [self.parse_type()]
        while self.accept(","):
            args.append(self.parse_type())
        self.expect(">")
        return args

    # --- bodies ----------------------------------------------------------

    def type_body(self, type_name) -> list[MemberDecl]:
        self.expect("{")
        members = []
        while not self.at("}"):
            if self.peek().kind == EOF:
                self.fail("unexpected end of file in type body")
            if self.accept(";"):
                continue
            members.extend(self.member(type_name))
        self.expect("}")
        return members

    def enum_body(self, type_name) -> list[MemberDecl]:
        self.expect("{")
        members = []
        # constants until ';' or '}'
        while not self.at(";") and not self.at("}"):
            start_idx = self.pos
            start_tok = self.peek()
            annos = []
            while self.at("@"):
                annos.append(self.annotation())
            name_tok = self.expect_ident()
            args = None
            if self.at("("):
                a0, a1 = self.skip_balanced("(")
                args = (a0, a1)
            if self.at("{"):
                self.skip_balanced("{")
            end_tok = self.toks[self.pos - 1]
            members.append(
                MemberDecl(
                    kind="enum_constant",
                    name=name_tok.text,
                    modifiers=[],
                    annotations=annos,
                    span=self.span_between(start_tok, end_tok),
                    constant_args=args,
                    body_tokens=(start_idx, self.pos),
                )
            )
            if not self.accept(","):
                break
        if self.accept(";"):
            while not self.at("}"):
                if self.peek().kind == EOF:
                    self.fail("unexpected end of file in enum body")
                if self.accept(";"):
                    continue
                members.extend(self.member(type_name))
        self.expect("}")
        return members

    def member(self, type_name) -> list[MemberDecl]:
        start_tok = self.peek()
        mods, annos = self.modifiers_and_annotations()

        # initializer block
        if self.at("{"):
            b0 = self.peek()
            t0, t1 = self.skip_balanced("{")
            end_tok = self.toks[self.pos - 1]
            return [
                MemberDecl(
                    kind="initializer",
                    name="",
                    modifiers=mods,
                    annotations=annos,
                    span=self.span_between(start_tok, end_tok),
                    body_span=self.span_between(b0, end_tok),
                    body_tokens=(t0, t1),
                    header_end_offset=b0.start,
                )
            ]

        # nested type
        tok = self.peek()
        if (tok.kind == KEYWORD and tok.text in _TYPE_KEYWORDS) or (
            self.at("@") and self.at("interface", 1)
        ):
            if self.at("@"):
                self.next()
                self.next()
                nested = self.finish_type("annotation", start_tok, mods, annos)
            else:
                self.next()
                nested = self.finish_type(tok.text, start_tok, mods, annos)
            return [
                MemberDecl(
                    kind="nested_type",
                    name=nested.name,
                    modifiers=mods,
                    annotations=annos,
                    span=nested.span,
                    nested=nested,
                )
            ]
        if tok.kind == IDENT and tok.text == "record" and self.peek(1).kind == IDENT:
            self.fail("record declarations are not supported")

        type_params, bounds = [], []
        if self.at("<"):
            type_params, bounds = self.type_parameters()

        # constructor: Name '('
        if (
            self.peek().kind == IDENT
            and self.peek().text == type_name
            and self.at("(", 1)
        ):
            name = self.next().text
            return [
                self.finish_callable(
                    "constructor", name, None, type_params, bounds, start_tok,
                    mods, annos,
                )
            ]

        decl_type = self.parse_type()
        if self.peek().kind != IDENT:
            self.fail(f"expected member name, found {self.peek().text!r}")
        name = self.next().text
        if self.at("("):
            return [
                self.finish_callable(
                    "method", name, decl_type, type_params, bounds, start_tok,
                    mods, annos,
                )
            ]
        return self.finish_field(decl_type, name, start_tok, mods, annos)

    def finish_callable(
        self, kind, name, return_type, type_params, bounds, start_tok, mods, annos
    ) -> MemberDecl:
        self.expect("(")
        params = []
        if not self.at(")"):
            while True:
                while self.at("@"):
                    self.annotation()
                self.accept("final")
                while self.at("@"):
                    self.annotation()
                p_type = self.parse_type()
                if self.accept("..."):
                    p_type.varargs = True
                p_name = self.expect_ident().text
                while self.at("[") and self.at("]", 1):
                    self.next()
                    self.next()
                    p_type.dims += 1
                params.append((p_type, p_name))
                if not self.accept(","):
                    break
        self.expect(")")
        if return_type is not None:
            while self.at("[") and self.at("]", 1):  # legacy array suffix
                self.next()
                self.next()
                return_type.dims += 1
        throws = []
        if self.accept("throws"):
            throws.append(self.parse_type())
            while self.accept(","):
                throws.append(self.parse_type())
        # annotation members may declare a default value
        if self.at("default"):
            self.next()
            while not self.at(";"):
                if self.peek().kind == EOF:
                    self.fail("unexpected end of file in default clause")
                if self.at("("):
                    self.skip_balanced("(")
                elif self.at("{"):
                    self.skip_balanced("{")
                else:
                    self.next()
        body_span = None
        body_tokens = None
        header_end = self.peek().start
        if self.at("{"):
            b0 = self.peek()
            t0, t1 = self.skip_balanced("{")
            end_tok = self.toks[self.pos - 1]
            body_span = self.span_between(b0, end_tok)
            body_tokens = (t0, t1)
        else:
            end_tok = self.expect(";")
        return MemberDecl(
            kind=kind,
            name=name,
            modifiers=mods,
            annotations=annos,
            span=self.span_between(start_tok, end_tok),
            type_parameters=type_params,
            type_param_bounds=bounds,
            return_type=return_type,
            parameters=params,
            throws_list=throws,
            body_span=body_span,
            body_tokens=body_tokens,
            header_end_offset=header_end,
        )

    def finish_field(self, f_type, first_name, start_tok, mods, annos):
        members = []
        name = first_name
        decl_start = start_tok
        name_tok = self.toks[self.pos - 1]
        prefix_span = (start_tok.start, name_tok.start)
        first = True
        while True:
            dims = 0
            while self.at("[") and self.at("]", 1):
                self.next()
                self.next()
                dims += 1
            this_type = ParsedType(
                name=f_type.name,
                type_args=f_type.type_args,
                dims=f_type.dims + dims,
            )
            header_end = self.toks[self.pos - 1].end
            init_range = None
            if self.accept("="):
                i0 = self.pos
                depth = 0
                while True:
                    tok = self.peek()
                    if tok.kind == EOF:
                        self.fail("unexpected end of file in field initializer")
                    if tok.kind == OP:
                        if tok.text in "([{":
                            depth += 1
                        elif tok.text in ")]}":
                            depth -= 1
                        elif depth == 0 and tok.text in (",", ";"):
                            break
                    self.next()
                init_range = (i0, self.pos)
            end_tok = self.toks[self.pos - 1]
            members.append(
                MemberDecl(
                    kind="field",
                    name=name,
                    modifiers=list(mods),
                    annotations=list(annos),
                    span=self.span_between(decl_start, end_tok),
                    field_type=this_type,
                    initializer_tokens=init_range,
                    header_end_offset=header_end,
                    type_prefix_span=prefix_span,
                    declarator_dims=dims,
                    declarator_first=first,
                )
            )
            if self.accept(","):
                first = False
                decl_start = self.peek()
                name = self.expect_ident().text
                continue
            self.expect(";")
            return members


def _assign_paths(unit: CompilationUnit, t: TypeDecl, path: str):
    t.binary_path = path
    owner_fqn = unit.fqn(t)
    for m in t.members:
        if m.kind == "nested_type":
            _assign_paths(unit, m.nested, f"{path}${m.nested.name}")
            m.signature = f"{owner_fqn}${m.nested.name}"
        else:
            m.signature = format_member_signature(owner_fqn, m)
    # disambiguate repeated initializer blocks
    seen = {}
    for m in t.members:
        if m.kind == "initializer":
            k = seen.get("<clinit>", 0)
            m.name = "<clinit>" if k == 0 else f"<clinit>${k}"
            seen["<clinit>"] = k + 1
            m.signature = format_member_signature(owner_fqn, m)


def members_overlapping(unit: CompilationUnit, lines) -> list[str]:
    """Signatures of the innermost members whose span intersects the lines.

    Lines inside a type but outside all of its members, and lines outside
    every type (package/import area), yield type-level targets reported as
    the bare type FQN."""
    out: set[str] = set()
    for line in lines:
        hit = False
        for t in unit.types:
            if t.span.contains_line(line):
                out.add(_innermost(unit, t, line))
                hit = True
        if not hit and unit.types:
            for t in unit.types:
                out.add(unit.fqn(t))
    return sorted(out)


def _innermost(unit: CompilationUnit, t: TypeDecl, line: int) -> str:
    for m in t.members:
        if m.kind == "nested_type" and m.nested.span.contains_line(line):
            return _innermost(unit, m.nested, line)
        if m.span.contains_line(line):
            return m.signature
    return unit.fqn(t)


def all_member_signatures(unit: CompilationUnit) -> list[str]:
    """Every leaf member signature in the unit, in declaration order."""
    out = []

    def walk(t: TypeDecl):
        for m in t.members:
            if m.kind == "nested_type":
                walk(m.nested)
            else:
                out.append(m.signature)

    for t in unit.types:
        walk(t)
    return out

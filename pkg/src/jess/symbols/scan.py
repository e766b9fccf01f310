"""Token-stream scanner for member bodies.

Walks a body's token range, building a lexical block tree with local
variable definitions and emitting Reference records for member accesses,
calls, creations, casts, catch/throw sites, for-each sources and
try-with-resources.  Bodies are never lowered to statement trees; the
scanner recognizes exactly the constructs reference extraction and stub
inference need."""

from __future__ import annotations

from jess.symbols.model import Reference, ScanBlock, ScanResult
from jess.syntax.ast import MemberDecl, ParsedType, SourceSpan
from jess.syntax.tokens import CHAR, EOF, IDENT, KEYWORD, NUMBER, OP, STRING

_UNARY_START_KINDS = {IDENT, NUMBER, STRING, CHAR}
_UNARY_START_TEXT = {"(", "new", "this", "super", "!", "~"}
_STMT_KEYWORDS = {
    "if", "while", "for", "do", "try", "catch", "finally", "switch", "return",
    "throw", "break", "continue", "assert", "synchronized", "else", "case",
    "default",
}

_DECL_START_KEYWORDS = {
    "final", "boolean", "byte", "short", "int", "long", "char", "float",
    "double",
}


def scan_member_body(unit, type_decl, member: MemberDecl) -> ScanResult:
    """Scan a method/constructor/initializer body or enum constant tokens."""
    rng = member.body_tokens
    if rng is None:
        return ScanResult([], ScanBlock(0, 0), [])
    scanner = _Scanner(unit, type_decl, member, rng[0], rng[1])
    for p_type, p_name in member.parameters:
        scanner.root.defs[p_name] = (p_type, rng[0])
    scanner.run()
    return ScanResult(scanner.refs, scanner.root, scanner.blocks)


def scan_expression(unit, type_decl, member: MemberDecl, rng, use) -> ScanResult:
    """Scan a detached expression (field initializer, enum constant args)."""
    scanner = _Scanner(unit, type_decl, member, rng[0], rng[1])
    if use is not None:
        scanner.frames.append((rng[0], rng[1], use))
    scanner.run()
    return ScanResult(scanner.refs, scanner.root, scanner.blocks)


class _Scanner:
    def __init__(self, unit, type_decl, member, t0, t1):
        self.unit = unit
        self.toks = unit.tokens
        self.type_decl = type_decl
        self.member = member
        self.t0 = t0
        self.t1 = t1
        self.refs: list[Reference] = []
        self.match = self._match_brackets(t0, t1)
        self.root = ScanBlock(t0, t1)
        self.blocks: list[ScanBlock] = [self.root]
        for open_i, close_i in self.match.items():
            if self.toks[open_i].text == "{" and not (open_i == t0 and close_i == t1 - 1):
                self.blocks.append(ScanBlock(open_i, close_i + 1))
        self._parent_blocks()
        self.frames: list[tuple[int, int, tuple]] = []
        self.soft_until = -1
        self.stmt_head_at: set[int] = set()
        self.i = t0

    # --- setup ----------------------------------------------------------

    def _match_brackets(self, t0, t1):
        match = {}
        stack = []
        pairs = {"(": ")", "[": "]", "{": "}"}
        closing = {v: k for k, v in pairs.items()}
        for i in range(t0, t1):
            tok = self.toks[i]
            if tok.kind != OP:
                continue
            if tok.text in pairs:
                stack.append((tok.text, i))
            elif tok.text in closing:
                while stack:
                    otext, oi = stack.pop()
                    if otext == closing[tok.text]:
                        match[oi] = i
                        break
        return match

    def _parent_blocks(self):
        ordered = sorted(self.blocks, key=lambda b: (b.start, -b.end))
        for idx, blk in enumerate(ordered):
            for j in range(idx - 1, -1, -1):
                cand = ordered[j]
                if cand.start <= blk.start and blk.end <= cand.end and cand is not blk:
                    blk.parent = cand
                    break
        self.blocks = ordered

    def add_block(self, start, end) -> ScanBlock:
        blk = ScanBlock(start, end)
        self.blocks.append(blk)
        self._parent_blocks()
        return blk

    def block_at(self, i) -> ScanBlock:
        best = self.root
        for blk in self.blocks:
            if blk.start <= i < blk.end and blk.start >= best.start and blk.end <= best.end:
                best = blk
        return best

    # --- small helpers ----------------------------------------------------

    def tok(self, i):
        return self.toks[i] if i < len(self.toks) else self.toks[-1]

    def span(self, i, j) -> SourceSpan:
        a, b = self.toks[i], self.toks[max(i, j - 1)]
        return SourceSpan(self.unit.file, a.start, b.end, a.line, b.line)

    def active_use(self, i):
        best = None
        size = None
        for start, end, payload in self.frames:
            if start <= i < end and (size is None or end - start < size):
                best, size = payload, end - start
        return best

    def emit(self, ref: Reference):
        if ref.site_tok < self.soft_until:
            ref.soft = True
        self.refs.append(ref)
        return ref

    def make_ref(self, kind, name, i, j, **kw) -> Reference:
        return Reference(
            kind=kind,
            name=name,
            site=self.span(i, j),
            unit=self.unit,
            enclosing_type=self.type_decl,
            enclosing_member=self.member.signature if self.member else None,
            member_decl=self.member,
            site_tok=i,
            **kw,
        )

    def stmt_end(self, i):
        """End (exclusive) of the statement starting at token i."""
        if self.tok(i).is_op("{"):
            return self.match.get(i, self.t1 - 1) + 1
        depth = 0
        j = i
        while j < self.t1:
            t = self.toks[j]
            if t.kind == OP:
                if t.text in "([{":
                    depth += 1
                elif t.text in ")]}":
                    if depth == 0:
                        return j
                    depth -= 1
                elif t.text == ";" and depth == 0:
                    return j + 1
            j += 1
        return self.t1

    def split_args(self, open_i):
        """Top-level comma slices inside a bracket pair. Returns list of ranges."""
        close = self.match.get(open_i)
        if close is None:
            return [], open_i + 1
        args = []
        depth = 0
        start = open_i + 1
        for j in range(open_i + 1, close):
            t = self.toks[j]
            if t.kind == OP:
                if t.text in "([{":
                    depth += 1
                elif t.text in ")]}":
                    depth -= 1
                elif t.text == "," and depth == 0:
                    args.append((start, j))
                    start = j + 1
        if start < close:
            args.append((start, close))
        return args, close

    def try_parse_type(self, i):
        """Parse a type token sequence at i. Returns (ParsedType, next_i,
        had_type_args) or None."""
        tok = self.tok(i)
        if tok.kind == KEYWORD and tok.text in (
            "boolean", "byte", "short", "int", "long", "char", "float",
            "double", "void",
        ):
            t = ParsedType(name=tok.text)
            j = i + 1
        elif tok.kind == IDENT:
            parts = [tok.text]
            j = i + 1
            targs = []
            had = False
            if self.tok(j).is_op("<"):
                parsed = self._parse_type_args(j)
                if parsed is None:
                    return None
                targs, j = parsed
                had = True
            while self.tok(j).is_op(".") and self.tok(j + 1).kind == IDENT:
                parts.append(self.tok(j + 1).text)
                j += 2
                if self.tok(j).is_op("<"):
                    parsed = self._parse_type_args(j)
                    if parsed is None:
                        return None
                    targs, j = parsed
                    had = True
            t = ParsedType(name=".".join(parts), type_args=targs)
            dims = 0
            while self.tok(j).is_op("[") and self.tok(j + 1).is_op("]"):
                dims += 1
                j += 2
            t.dims = dims
            return t, j, had
        else:
            return None
        dims = 0
        while self.tok(j).is_op("[") and self.tok(j + 1).is_op("]"):
            dims += 1
            j += 2
        t.dims = dims
        return t, j, False

    def _parse_type_args(self, i):
        """Parse '<' ... '>' type arguments at i, or None if not type-shaped."""
        j = i + 1
        args = []
        if self.tok(j).is_op(">"):
            return args, j + 1
        while True:
            t = self.tok(j)
            if t.is_op("?"):
                w = ParsedType(name="?", wildcard=True)
                j += 1
                if self.tok(j).is_kw("extends") or self.tok(j).is_kw("super"):
                    parsed = self.try_parse_type(j + 1)
                    if parsed is None:
                        return None
                    inner, j, _ = parsed
                    w.type_args = [inner]
                args.append(w)
            else:
                parsed = self.try_parse_type(j)
                if parsed is None:
                    return None
                inner, j, _ = parsed
                args.append(inner)
            if self.tok(j).is_op(","):
                j += 1
                continue
            if self.tok(j).is_op(">"):
                return args, j + 1
            return None

    # --- the walk ---------------------------------------------------------

    def run(self):
        i = self.t0
        if self.tok(i).is_op("{"):
            i += 1
        self.stmt_head_at.add(i)
        stmt_head = True
        header_closes = set()
        while i < self.t1:
            tok = self.toks[i]
            if tok.kind == EOF:
                break
            if i in self.stmt_head_at:
                stmt_head = True
            if tok.kind == OP:
                if tok.text in (";", "{", "}"):
                    stmt_head = True
                    i += 1
                    self.stmt_head_at.add(i)
                    continue
                if tok.text == "@":
                    i = self._skip_annotation(i)
                    continue
                if tok.text == "(":
                    ni = self._maybe_lambda_params(i)
                    if ni is None:
                        ni = self._maybe_cast(i)
                    if ni is not None:
                        i = ni
                        stmt_head = False
                        continue
                    i += 1
                    continue
                if tok.text == ")" and i in header_closes:
                    stmt_head = True
                    i += 1
                    self.stmt_head_at.add(i)
                    continue
                i += 1
                if tok.text == ")":
                    self.stmt_head_at.discard(i - 1)
                continue
            if tok.kind == KEYWORD:
                if stmt_head and tok.text in _DECL_START_KEYWORDS:
                    ni = self._try_local_decl(i)
                    if ni is not None:
                        i = ni
                        stmt_head = False
                        continue
                i, stmt_head = self._keyword(i, tok, header_closes, stmt_head)
                continue
            if tok.kind == IDENT:
                if stmt_head:
                    ni = self._try_local_decl(i)
                    if ni is not None:
                        i = ni
                        stmt_head = False
                        continue
                    if self.tok(i + 1).is_op(":") and not self.tok(i + 2).is_op(":"):
                        i += 2  # label
                        self.stmt_head_at.add(i)
                        continue
                i = self._chain(i, stmt_head)
                stmt_head = False
                continue
            i += 1
            stmt_head = False

    def _skip_annotation(self, i):
        i += 1
        while self.tok(i).kind == IDENT:
            i += 1
            if self.tok(i).is_op(".") and self.tok(i + 1).kind == IDENT:
                i += 1
                continue
            break
        if self.tok(i).is_op("("):
            return self.match.get(i, i) + 1
        return i

    # --- keywords ---------------------------------------------------------

    def _keyword(self, i, tok, header_closes, stmt_head):
        text = tok.text
        if text in ("if", "while", "switch", "synchronized"):
            p = i + 1
            if self.tok(p).is_op("("):
                close = self.match.get(p, p)
                payload = ("cond",) if text in ("if", "while") else ("operand", text)
                self.frames.append((p + 1, close, payload))
                header_closes.add(close)
            return i + 1, False
        if text == "for":
            return self._for(i, header_closes), False
        if text == "try":
            return self._try(i), True
        if text == "catch":
            return self._catch(i), False
        if text == "return":
            end = self.stmt_end(i + 1)
            self.frames.append((i + 1, end, ("return",)))
            return i + 1, False
        if text == "throw":
            end = self.stmt_end(i + 1)
            self.frames.append((i + 1, end, ("throw",)))
            # bare-expression throws also constrain the thrown value's type
            if not self.tok(i + 1).is_kw("new"):
                expr_end = end - 1 if self.tok(end - 1).is_op(";") else end
                if expr_end > i + 1:
                    self.emit(
                        self.make_ref(
                            "throw", "", i + 1, expr_end,
                            receiver=(i + 1, expr_end),
                        )
                    )
            return i + 1, False
        if text == "new":
            return self._creation(i), False
        if text == "super":
            return self._super(i), False
        if text == "this":
            if self.tok(i + 1).is_op("("):
                ref = self.make_ref("method_call", "<init>", i, i + 1)
                ref.args, close = self._attach_args(ref, i + 1)
                self.emit(ref)
                return i + 1, False
            if self.tok(i + 1).is_op("."):
                return self._chain(i, False), False
            return i + 1, False
        if text == "instanceof":
            parsed = self.try_parse_type(i + 1)
            if parsed:
                t, j, _ = parsed
                self.emit(self.make_ref("type_use", t.name, i + 1, j, type=t))
                if self.tok(j).kind == IDENT:  # pattern variable
                    blk = self.block_at(i)
                    blk.defs[self.tok(j).text] = (t, j)
                    j += 1
                return j, False
            return i + 1, False
        if text in ("case",):
            j = i + 1
            depth = 0
            while j < self.t1:
                t = self.toks[j]
                if t.kind == OP:
                    if t.text in "([{":
                        depth += 1
                    elif t.text in ")]}":
                        depth -= 1
                    elif depth == 0 and t.text in (":", "->"):
                        break
                j += 1
            prev = self.soft_until
            self.soft_until = max(prev, j)
            self.stmt_head_at.add(j + 1)
            return i + 1, False
        if text in ("break", "continue"):
            j = i + 1
            if self.tok(j).kind == IDENT:
                j += 1
            return j, False
        if text in ("else", "do", "finally", "default"):
            j = i + 1
            if text == "default" and self.tok(j).is_op(":"):
                j += 1
            self.stmt_head_at.add(j)
            return j, True
        return i + 1, stmt_head

    def _for(self, i, header_closes):
        p = i + 1
        if not self.tok(p).is_op("("):
            return i + 1
        close = self.match.get(p, p)
        header_closes.add(close)
        j = p + 1
        while self.tok(j).is_kw("final") or self.tok(j).is_op("@"):
            j = j + 1 if self.tok(j).is_kw("final") else self._skip_annotation(j)
        parsed = self.try_parse_type(j)
        if parsed and self.tok(parsed[1]).kind == IDENT and self.tok(parsed[1] + 1).is_op(":"):
            loop_type, k, _ = parsed
            var_name = self.tok(k).text
            body_end = self.stmt_end(close + 1)
            blk = self.add_block(p, body_end)
            blk.defs[var_name] = (loop_type, k)
            if not loop_type.is_primitive and loop_type.name != "var":
                self.emit(self.make_ref("type_use", loop_type.name, j, k, type=loop_type))
            expr_start = k + 2
            ref = self.make_ref(
                "foreach_iterable", "", expr_start, close,
                receiver=(expr_start, close),
                type=loop_type,
            )
            self.emit(ref)
            self.frames.append((expr_start, close, ("foreach_src", loop_type)))
            return expr_start
        # classic for: the init clause may declare variables scoped to the loop
        body_end = self.stmt_end(close + 1)
        self.add_block(p, body_end)
        self.stmt_head_at.add(p + 1)
        depth = 0
        semis = []
        for k in range(p + 1, close):
            t = self.toks[k]
            if t.kind == OP:
                if t.text in "([{":
                    depth += 1
                elif t.text in ")]}":
                    depth -= 1
                elif t.text == ";" and depth == 0:
                    semis.append(k)
        if len(semis) >= 2:
            self.frames.append((semis[0] + 1, semis[1], ("cond",)))
        return p + 1

    def _try(self, i):
        j = i + 1
        if not self.tok(j).is_op("("):
            return j
        close = self.match.get(j, j)
        body_open = close + 1
        body_close = self.match.get(body_open, body_open) if self.tok(body_open).is_op("{") else close
        blk = self.add_block(j, body_close + 1)
        k = j + 1
        while k < close:
            while self.tok(k).is_kw("final") or self.tok(k).is_op("@"):
                k = k + 1 if self.tok(k).is_kw("final") else self._skip_annotation(k)
            parsed = self.try_parse_type(k)
            if parsed and self.tok(parsed[1]).kind == IDENT and self.tok(parsed[1] + 1).is_op("="):
                r_type, n, _ = parsed
                name_tok = self.tok(n)
                blk.defs[name_tok.text] = (r_type, n)
                if not r_type.is_primitive and r_type.name != "var":
                    self.emit(self.make_ref("type_use", r_type.name, k, n, type=r_type))
                init_start = n + 2
                init_end = init_start
                depth = 0
                while init_end < close:
                    t = self.toks[init_end]
                    if t.kind == OP:
                        if t.text in "([{":
                            depth += 1
                        elif t.text in ")]}":
                            depth -= 1
                        elif t.text == ";" and depth == 0:
                            break
                    init_end += 1
                self.emit(
                    self.make_ref(
                        "try_resource", r_type.simple_name, k, n,
                        receiver=(init_start, init_end),
                        type=r_type,
                    )
                )
                self.frames.append((init_start, init_end, ("resource", r_type)))
                k = init_end + 1
            else:
                # existing-variable resource: its type must close itself
                expr_end = k
                depth = 0
                while expr_end < close:
                    t = self.toks[expr_end]
                    if t.kind == OP and t.text == ";" and depth == 0:
                        break
                    if t.kind == OP and t.text in "([{":
                        depth += 1
                    if t.kind == OP and t.text in ")]}":
                        depth -= 1
                    expr_end += 1
                self.emit(
                    self.make_ref(
                        "try_resource", "", k, expr_end,
                        receiver=(k, expr_end),
                    )
                )
                k = expr_end + 1
        return j + 1

    def _catch(self, i):
        j = i + 1
        if not self.tok(j).is_op("("):
            return j
        close = self.match.get(j, j)
        body_end = self.stmt_end(close + 1)
        blk = self.add_block(j, body_end)
        k = j + 1
        first_type = None
        while k < close:
            while self.tok(k).is_kw("final") or self.tok(k).is_op("@"):
                k = k + 1 if self.tok(k).is_kw("final") else self._skip_annotation(k)
            parsed = self.try_parse_type(k)
            if parsed is None:
                break
            c_type, n, _ = parsed
            first_type = first_type or c_type
            self.emit(self.make_ref("catch_type", c_type.name, k, n, type=c_type))
            if self.tok(n).is_op("|"):
                k = n + 1
                continue
            if self.tok(n).kind == IDENT:
                blk.defs[self.tok(n).text] = (first_type, n)
            break
        return close + 1

    def _creation(self, i):
        parsed = self.try_parse_type(i + 1)
        if parsed is None:
            return i + 1
        c_type, j, had_targs = parsed
        if self.tok(j).is_op("("):
            ref = self.make_ref(
                "object_creation", c_type.name, i, j,
                type=c_type,
                generic_args=list(c_type.type_args) if had_targs else None,
            )
            ref.args, close = self._attach_args(ref, j)
            ref.use = self._value_use(i, close)
            self.emit(ref)
            return j + 1
        if self.tok(j).is_op("[") or c_type.dims:
            self.emit(self.make_ref("type_use", c_type.name, i + 1, j, type=c_type))
            return i + 1 if self.tok(j).is_op("[") else j
        return i + 1

    def _super(self, i):
        if self.tok(i + 1).is_op("("):
            ref = self.make_ref("super_ctor_call", "<init>", i, i + 1)
            ref.args, _ = self._attach_args(ref, i + 1)
            self.emit(ref)
            return i + 1
        if self.tok(i + 1).is_op(".") and self.tok(i + 2).kind == IDENT:
            name_i = i + 2
            if self.tok(name_i + 1).is_op("("):
                ref = self.make_ref(
                    "method_call", self.tok(name_i).text, i, name_i + 1,
                    receiver=(i, i + 1),
                )
                ref.args, close = self._attach_args(ref, name_i + 1)
                ref.use = self._value_use(i, close)
                self.emit(ref)
                return name_i + 1
            ref = self.make_ref(
                "field_access", self.tok(name_i).text, i, name_i + 1,
                receiver=(i, i + 1),
            )
            ref.use = self._value_use(i, name_i + 1)
            self.emit(ref)
            return name_i + 1
        return i + 1

    # --- expressions --------------------------------------------------------

    def _maybe_lambda_params(self, i):
        """Parameter list of a lambda `( ... ) ->`. Declares parameters over
        the lambda body and skips past the arrow."""
        close = self.match.get(i)
        if close is None or not self.tok(close + 1).is_op("->"):
            return None
        body_end = self.stmt_end(close + 2)
        blk = self.add_block(i, body_end)
        k = i + 1
        while k < close:
            while self.tok(k).is_kw("final") or self.tok(k).is_op("@"):
                k = k + 1 if self.tok(k).is_kw("final") else self._skip_annotation(k)
            parsed = self.try_parse_type(k)
            if parsed and self.tok(parsed[1]).kind == IDENT:
                p_type, n, _ = parsed
                blk.defs[self.tok(n).text] = (p_type, n)
                k = n + 1
            elif self.tok(k).kind == IDENT:
                blk.defs[self.tok(k).text] = (None, k)
                k += 1
            if self.tok(k).is_op(","):
                k += 1
            else:
                break
        return close + 2

    def _maybe_cast(self, i):
        """Detect a cast at an opening parenthesis. Returns next index or None."""
        close = self.match.get(i)
        if close is None:
            return None
        parsed = self.try_parse_type(i + 1)
        if parsed is None or parsed[1] != close:
            return None
        c_type, _, _ = parsed
        nxt = self.tok(close + 1)
        starts_unary = nxt.kind in _UNARY_START_KINDS or (
            nxt.kind == OP and nxt.text in ("(", "!", "~")
        ) or (nxt.kind == KEYWORD and nxt.text in ("new", "this", "super", "true", "false", "null"))
        if not starts_unary:
            return None
        if not c_type.is_primitive:
            blk = self.block_at(i)
            if "." not in c_type.name and blk.lookup(c_type.name, i):
                return None  # parenthesized local variable, not a cast
        castee_end = self._primary_end(close + 1)
        ref = self.make_ref(
            "cast", c_type.name, i + 1, close, type=c_type,
            castee=(close + 1, castee_end),
        )
        ref.use = self._value_use(i, castee_end)
        if not c_type.is_primitive:
            self.emit(ref)
        return close + 1

    def _primary_end(self, i):
        j = i
        while self.tok(j).kind == OP and self.tok(j).text in ("!", "~", "+", "-"):
            j += 1
        tok = self.tok(j)
        if tok.kind in (NUMBER, STRING, CHAR):
            return j + 1
        if tok.kind == KEYWORD and tok.text in ("true", "false", "null"):
            return j + 1
        if tok.kind == KEYWORD and tok.text == "new":
            parsed = self.try_parse_type(j + 1)
            if parsed and self.tok(parsed[1]).is_op("("):
                j = self.match.get(parsed[1], parsed[1]) + 1
            elif parsed:
                j = parsed[1]
            else:
                return j + 1
        elif tok.kind == OP and tok.text == "(":
            j = self.match.get(j, j) + 1
        while True:
            tok = self.tok(j)
            if tok.kind in (IDENT,) or (tok.kind == KEYWORD and tok.text in ("this", "super", "class")):
                j += 1
                continue
            if tok.kind == OP and tok.text == ".":
                j += 1
                continue
            if tok.kind == OP and tok.text in ("(", "["):
                j = self.match.get(j, j) + 1
                continue
            return j

    def _attach_args(self, ref, open_i):
        args, close = self.split_args(open_i)
        for idx, rng in enumerate(args):
            self.frames.append((rng[0], rng[1], ("arg", ref, idx)))
        return args, close

    def _value_use(self, start_i, close_i):
        """Value context of the expression ending right before close_i."""
        frame = self.active_use(start_i)
        nxt = self.tok(close_i + 1) if self.tok(close_i).is_op(")") else self.tok(close_i)
        if frame is not None:
            return frame
        if nxt.kind == OP and nxt.text == ";":
            return ("stmt",)
        if nxt.kind == OP and nxt.text == ".":
            return ("chain_recv",)
        if nxt.kind == OP:
            return ("operand", nxt.text)
        return ("operand", nxt.text)

    def _chain(self, i, stmt_head):
        """Scan a dotted identifier chain starting at i; emit one reference."""
        start = i
        segs = [(self.tok(i).text, i)]
        j = i + 1
        if self.tok(i).is_kw("this"):
            pass
        while self.tok(j).is_op(".") and (
            self.tok(j + 1).kind == IDENT or self.tok(j + 1).is_kw("class")
            or self.tok(j + 1).is_kw("this")
        ):
            segs.append((self.tok(j + 1).text, j + 1))
            j += 2
        last_name, last_i = segs[-1]

        # method reference `Chain::name` is kept opaque; names still extracted
        if self.tok(j).is_op("::"):
            head = ".".join(s for s, _ in segs)
            blk = self.block_at(i)
            if not blk.lookup(segs[0][0], i):
                t = ParsedType(name=head)
                ref = self.make_ref("type_use", head, i, j, type=t)
                ref.soft = True
                self.emit(ref)
            k = j + 1
            if self.tok(k).kind == IDENT or self.tok(k).is_kw("new"):
                k += 1
            return k

        # lambda parameter `x -> ...`
        if len(segs) == 1 and self.tok(j).is_op("->"):
            body_end = self.stmt_end(j + 1)
            blk = self.add_block(i, body_end)
            blk.defs[segs[0][0]] = (None, i)
            return j + 1

        if last_name == "class":
            head = ".".join(s for s, _ in segs[:-1])
            self.emit(self.make_ref("type_use", head, i, j, type=ParsedType(name=head)))
            return j

        if self.tok(j).is_op("("):
            receiver = (start, last_i - 1) if len(segs) > 1 else None
            ref = self.make_ref("method_call", last_name, start, j, receiver=receiver)
            ref.args, close = self._attach_args(ref, j)
            ref.use = self._value_use(start, close)
            self.emit(ref)
            return j + 1

        # plain chain: local variables produce no reference
        blk = self.block_at(i)
        if len(segs) == 1:
            if self.tok(start).is_kw("this"):
                return j
            local = blk.lookup(segs[0][0], i)
            if local:
                if self.tok(j).is_op("=") and not self.tok(j + 1).is_op("="):
                    rhs_end = self.stmt_end(j + 1)
                    self.frames.append((j + 1, rhs_end, ("assign_local", local[0])))
                return j
            ref = self.make_ref("field_access", last_name, start, j)
        else:
            receiver = (start, last_i - 1)
            ref = self.make_ref("field_access", last_name, start, j, receiver=receiver)
        if self.tok(j).is_op("=") and not self.tok(j + 1).is_op("="):
            ref.use = ("assign_target",)
            rhs_end = self.stmt_end(j + 1)
            ref.assigned_expr = (j + 1, rhs_end)
            self.frames.append((j + 1, rhs_end, ("assign", ref)))
        else:
            ref.use = self._value_use(start, j)
        self.emit(ref)
        return j

    def _try_local_decl(self, i):
        """Recognize `Type name (= init)? (, name (= init)?)* ;` at i."""
        j = i
        while self.tok(j).is_kw("final") or self.tok(j).is_op("@"):
            j = j + 1 if self.tok(j).is_kw("final") else self._skip_annotation(j)
        parsed = self.try_parse_type(j)
        if parsed is None:
            return None
        d_type, k, _ = parsed
        if self.tok(k).kind != IDENT:
            return None
        after = self.tok(k + 1)
        if not (after.kind == OP and after.text in ("=", ";", ",")):
            return None
        is_var = d_type.name == "var" and not d_type.type_args and d_type.dims == 0
        declared = None if is_var else d_type
        stmt_close = self.stmt_end(i)
        blk = self.block_at(i)
        # declared type reference (creation of the same type subsumes it)
        if declared is not None and not declared.is_primitive:
            init_is_same_new = (
                after.text == "="
                and self.tok(k + 2).is_kw("new")
                and self._creation_type_name(k + 3) == declared.name
            )
            if not init_is_same_new:
                self.emit(self.make_ref("type_use", declared.name, j, k, type=d_type))
        n = k
        while n < stmt_close:
            name_tok = self.tok(n)
            if name_tok.kind != IDENT:
                break
            blk.defs[name_tok.text] = (declared, n)
            n += 1
            while self.tok(n).is_op("[") and self.tok(n + 1).is_op("]"):
                n += 2
            if self.tok(n).is_op("="):
                init_start = n + 1
                depth = 0
                m = init_start
                while m < stmt_close:
                    t = self.toks[m]
                    if t.kind == OP:
                        if t.text in "([{":
                            depth += 1
                        elif t.text in ")]}":
                            depth -= 1
                        elif depth == 0 and t.text in (",", ";"):
                            break
                    m += 1
                payload = ("decl_assign", declared)
                self.frames.append((init_start, m, payload))
                n = m
            if self.tok(n).is_op(","):
                n += 1
                continue
            break
        return k  # resume walking at the first declarator name

    def _creation_type_name(self, i):
        parsed = self.try_parse_type(i)
        return parsed[0].name if parsed else None

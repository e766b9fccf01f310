"""Name resolution over the symbol index.

Approximates Java scoping: locals and parameters, same-type members,
enclosing types, single imports, same package, on-demand imports,
classpath, then the JDK baseline.  The first unambiguous hit wins.
Resolution never raises for missing symbols; it returns an unresolved
record carrying the full usage context for stub inference."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from jess.symbols.index import IndexedType, MemberView, SymbolIndex
from jess.symbols.model import Reference, Resolution
from jess.symbols.scan import scan_expression, scan_member_body
from jess.syntax.ast import CompilationUnit, MemberDecl, ParsedType, TypeDecl
from jess.syntax.tokens import CHAR, IDENT, KEYWORD, NUMBER, OP, STRING

_PRIMITIVES = {
    "boolean", "byte", "short", "int", "long", "char", "float", "double",
    "void", "var", "?",
}

BUILTIN = Resolution("builtin")


def scan_of(index: SymbolIndex, unit, decl, member: MemberDecl):
    """Memoized body scan for a member (or detached field initializer)."""
    key = (unit.file, member.signature, member.kind)
    hit = index.scan_cache.get(key)
    if hit is None:
        if member.kind == "field":
            if member.initializer_tokens is None:
                from jess.symbols.model import ScanBlock, ScanResult

                hit = ScanResult([], ScanBlock(0, 0), [])
            else:
                hit = scan_expression(
                    unit, decl, member, member.initializer_tokens,
                    ("field_decl", member.field_type),
                )
        elif member.kind == "enum_constant":
            if member.constant_args is not None:
                a0, a1 = member.constant_args
                hit = scan_expression(unit, decl, member, (a0 + 1, a1 - 1), ("enum_ctor_arg",))
            else:
                from jess.symbols.model import ScanBlock, ScanResult

                hit = ScanResult([], ScanBlock(0, 0), [])
        else:
            hit = scan_member_body(unit, decl, member)
        index.scan_cache[key] = hit
    return hit


# --- type name resolution ---------------------------------------------------


def type_params_in_scope(index: SymbolIndex, decl: TypeDecl, member=None) -> set[str]:
    names = set()
    if member is not None:
        names.update(member.type_parameters)
    for t in index.enclosing_chain(decl):
        names.update(t.type_parameters)
    return names


def resolve_type_name(
    index: SymbolIndex,
    unit: Optional[CompilationUnit],
    decl: Optional[TypeDecl],
    name: str,
    tparams: frozenset = frozenset(),
) -> Optional[IndexedType]:
    """Resolve a written type name to an index entry, or None."""
    if name in _PRIMITIVES:
        return None
    if name in tparams:
        return None
    if "." in name:
        return _resolve_dotted(index, unit, decl, name, tparams)
    return _resolve_simple(index, unit, decl, name)


def is_builtin_type_name(name: str, tparams=frozenset()) -> bool:
    return name in _PRIMITIVES or name in tparams


def _resolve_dotted(index, unit, decl, name, tparams):
    hit = index.get(name)
    if hit is not None:
        return hit
    parts = name.split(".")
    # leading segment as a resolvable type, rest as nested types
    head = _resolve_simple(index, unit, decl, parts[0])
    if head is not None:
        nested = index.get(head.fqn + "$" + "$".join(parts[1:]))
        if nested is not None:
            return nested
    # package-qualified with nested classes: a.b.Outer.Inner
    for split in range(len(parts) - 1, 0, -1):
        fqn = ".".join(parts[:split]) + "$" + "$".join(parts[split:])
        hit = index.get(fqn)
        if hit is not None:
            return hit
    return None


def _resolve_simple(index, unit, decl, name):
    # enclosing chain: the types themselves, their nesteds, then siblings
    if decl is not None:
        for scope in index.enclosing_chain(decl):
            if scope.name == name:
                return index.get(index.unit_of(scope).fqn(scope))
            for nested in scope.nested_types():
                if nested.name == name:
                    return index.get(index.unit_of(nested).fqn(nested))
    if unit is not None:
        for top in unit.types:
            if top.name == name:
                return index.get(unit.fqn(top))
        # single imports
        for imp in unit.imports:
            if imp.on_demand or imp.static_import:
                continue
            if imp.last_segment == name:
                hit = index.get(imp.path)
                if hit is not None:
                    return hit
                # import naming a nested type: a.b.Outer.Inner
                parts = imp.path.split(".")
                for split in range(len(parts) - 1, 0, -1):
                    fqn = ".".join(parts[:split]) + "$" + "$".join(parts[split:])
                    hit = index.get(fqn)
                    if hit is not None:
                        return hit
                return None  # imported but not on the index: unresolved
        # same package
        pkg = unit.package_name
        hit = index.get(f"{pkg}.{name}" if pkg else name)
        if hit is not None:
            return hit
        # on-demand imports, declaration order
        for imp in unit.imports:
            if imp.on_demand and not imp.static_import:
                hit = index.get(f"{imp.path}.{name}")
                if hit is not None:
                    return hit
    # implicit java.lang
    return index.get(f"java.lang.{name}")


def resolution_for_type(entry: IndexedType) -> Resolution:
    if entry.origin == "source":
        return Resolution.internal_type(entry.fqn)
    if entry.origin == "classpath":
        return Resolution.classpath(entry.fqn)
    return Resolution.jdk(entry.fqn)


# --- hierarchy walking -------------------------------------------------------


def super_entries(index: SymbolIndex, entry: IndexedType) -> list[IndexedType]:
    out = []
    for name in entry.super_names():
        if entry.origin == "source":
            sup = resolve_type_name(
                index, entry.unit, entry.decl, name,
                frozenset(type_params_in_scope(index, entry.decl)),
            )
        else:
            sup = index.get(name)
        if sup is not None:
            out.append(sup)
    if not out and entry.fqn != "java.lang.Object":
        obj = index.get("java.lang.Object")
        if obj is not None:
            out.append(obj)
    return out


def hierarchy(index: SymbolIndex, entry: IndexedType):
    """entry and its supertypes, nearest first, cycle-safe."""
    seen = set()
    queue = [entry]
    while queue:
        cur = queue.pop(0)
        if cur.fqn in seen:
            continue
        seen.add(cur.fqn)
        yield cur
        queue.extend(super_entries(index, cur))


def unresolved_super_names(index: SymbolIndex, entry: IndexedType) -> list[str]:
    """Written supertype names of a source entry that resolve to nothing."""
    if entry.origin != "source":
        return []
    out = []
    tparams = frozenset(type_params_in_scope(index, entry.decl))
    for t in entry.decl.extends_list + entry.decl.implements_list:
        if is_builtin_type_name(t.name, tparams):
            continue
        if resolve_type_name(index, entry.unit, entry.decl, t.name, tparams) is None:
            out.append(t.name)
    return out


def find_member(
    index: SymbolIndex,
    entry: IndexedType,
    name: str,
    kind: str,
    argc: Optional[int] = None,
    arg_type_names: Optional[list[Optional[str]]] = None,
) -> Optional[tuple[MemberView, IndexedType]]:
    """Member lookup walking the supertype chain; nearest level wins.

    Overloads: arity filter first, then count of matching statically-known
    argument types, then declaration order."""
    for owner in hierarchy(index, entry):
        candidates = [
            v for v in owner.members_named(name, kind)
            if argc is None or _arity_ok(v, argc)
        ]
        if not candidates:
            continue
        if len(candidates) == 1 or not arg_type_names:
            return candidates[0], owner
        scored = []
        for pos, v in enumerate(candidates):
            score = 0
            for i, arg_name in enumerate(arg_type_names or []):
                if arg_name is None or i >= len(v.param_types or []):
                    continue
                if _type_names_match(v.param_types[i], arg_name):
                    score += 1
            scored.append((-score, pos, v))
        scored.sort()
        return scored[0][2], owner
    return None


def _arity_ok(view: MemberView, argc: int) -> bool:
    if view.arity == argc:
        return True
    if view.decl is not None and view.decl.parameters:
        if view.decl.parameters[-1][0].varargs and argc >= view.arity - 1:
            return True
    return False


def _type_names_match(declared: str, actual: str) -> bool:
    if declared == actual:
        return True
    return declared.rsplit(".", 1)[-1] == actual.rsplit(".", 1)[-1]


# --- expression typing -------------------------------------------------------


@dataclass
class TypedValue:
    kind: str  # value|class|unknown
    type_name: Optional[str] = None  # written or fqn; arrays keep [] suffix
    entry: Optional[IndexedType] = None

    @property
    def is_array(self) -> bool:
        return bool(self.type_name) and self.type_name.endswith("[]")


UNKNOWN = TypedValue("unknown")


def literal_type(tok) -> Optional[str]:
    if tok.kind == STRING:
        return "java.lang.String"
    if tok.kind == CHAR:
        return "char"
    if tok.kind == NUMBER:
        text = tok.text.lower()
        if text.endswith("l"):
            return "long"
        if text.endswith("f"):
            return "float"
        if text.endswith("d"):
            return "double"
        if not text.startswith("0x") and ("." in text or "e" in text):
            return "double"
        return "int"
    if tok.kind == KEYWORD and tok.text in ("true", "false"):
        return "boolean"
    if tok.kind == KEYWORD and tok.text == "null":
        return "null"
    return None


class ExprTyper:
    """Static type of a token-range expression, best effort."""

    def __init__(self, index: SymbolIndex, unit, decl, member, scan):
        self.index = index
        self.unit = unit
        self.decl = decl
        self.member = member
        self.scan = scan
        self.toks = unit.tokens
        self.tparams = frozenset(type_params_in_scope(index, decl, member))

    def type_of(self, rng) -> TypedValue:
        i, end = rng
        while i < end and self.toks[i].kind == OP and self.toks[i].text in ("!", "~", "+", "-"):
            i += 1
        if i >= end:
            return UNKNOWN
        tok = self.toks[i]
        lit = literal_type(tok)
        if lit is not None and not (tok.kind == KEYWORD and tok.text in ("this", "super")):
            value = TypedValue("value", lit)
            return self._trail(value, i + 1, end)
        if tok.kind == KEYWORD and tok.text == "new":
            parsed = self._parse_type(i + 1, end)
            if parsed is None:
                return UNKNOWN
            t, j = parsed
            if j < end and self.toks[j].is_op("["):
                return TypedValue("value", t.erased() + "[]")
            value = self._value_of_name(t.name)
            j = self._skip_group(j, end)
            return self._trail(value, j, end)
        if tok.kind == KEYWORD and tok.text == "this":
            fqn = self.unit.fqn(self.decl)
            return self._trail(TypedValue("value", fqn, self.index.get(fqn)), i + 1, end)
        if tok.kind == KEYWORD and tok.text == "super":
            sup = self._super_entry()
            value = TypedValue("value", sup.fqn if sup else None, sup)
            return self._trail(value, i + 1, end)
        if tok.kind == OP and tok.text == "(":
            close = self._matching(i, end)
            if close is None:
                return UNKNOWN
            parsed = self._parse_type(i + 1, close)
            if parsed is not None and parsed[1] == close:
                cast_t = parsed[0]
                if cast_t.dims or cast_t.is_primitive:
                    return TypedValue("value", cast_t.erased())
                return TypedValue("value", cast_t.name, self._entry_of_name(cast_t.name))
            inner = self.type_of((i + 1, close))
            return self._trail(inner, close + 1, end)
        if tok.kind != IDENT:
            return UNKNOWN

        # identifier head: local, then field, then a type name (longest prefix)
        name = tok.text
        if self.scan is not None:
            blk = self.scan.block_at(i)
            hit = blk.lookup(name, i)
            if hit is not None:
                declared, _ = hit
                if declared is None:
                    return UNKNOWN
                value = TypedValue(
                    "value", declared.erased(), self._entry_of_name(declared.name)
                )
                return self._trail(value, i + 1, end)
        field = self._field_in_scope(name)
        if field is not None:
            return self._trail(field, i + 1, end)
        entry = resolve_type_name(self.index, self.unit, self.decl, name, self.tparams)
        if entry is not None:
            return self._trail(TypedValue("class", entry.fqn, entry), i + 1, end)
        # dotted type prefix: a.b.C ...
        j = i + 1
        parts = [name]
        while j + 1 < end and self.toks[j].is_op(".") and self.toks[j + 1].kind == IDENT:
            parts.append(self.toks[j + 1].text)
            joined = ".".join(parts)
            entry = resolve_type_name(self.index, self.unit, self.decl, joined, self.tparams)
            j += 2
            if entry is not None:
                return self._trail(TypedValue("class", entry.fqn, entry), j, end)
        if name in self.tparams:
            return self._trail(TypedValue("value", "java.lang.Object",
                                          self.index.get("java.lang.Object")), i + 1, end)
        return UNKNOWN

    # --- helpers -----------------------------------------------------------

    def _matching(self, i, end):
        depth = 0
        for j in range(i, end):
            t = self.toks[j]
            if t.kind == OP:
                if t.text in "([{":
                    depth += 1
                elif t.text in ")]}":
                    depth -= 1
                    if depth == 0:
                        return j
        return None

    def _skip_group(self, j, end):
        if j < end and self.toks[j].kind == OP and self.toks[j].text in "([{":
            close = self._matching(j, end)
            return (close + 1) if close is not None else end
        return j

    def _parse_type(self, i, end):
        from jess.symbols.scan import _Scanner

        helper = _Scanner(self.unit, self.decl, self.member, i, max(end, i + 1))
        parsed = helper.try_parse_type(i)
        if parsed is None or parsed[1] > end:
            return None
        return parsed[0], parsed[1]

    def _entry_of_name(self, name) -> Optional[IndexedType]:
        return resolve_type_name(self.index, self.unit, self.decl, name, self.tparams)

    def _value_of_name(self, name) -> TypedValue:
        return TypedValue("value", name, self._entry_of_name(name))

    def _super_entry(self) -> Optional[IndexedType]:
        own = self.index.get(self.unit.fqn(self.decl))
        if own is None:
            return None
        for sup in super_entries(self.index, own):
            if not sup.is_interface or self.decl.kind == "interface":
                return sup
        return None

    def _field_in_scope(self, name) -> Optional[TypedValue]:
        for scope in self.index.enclosing_chain(self.decl):
            scope_entry = self.index.get(self.index.unit_of(scope).fqn(scope))
            if scope_entry is None:
                continue
            for owner in hierarchy(self.index, scope_entry):
                for view in owner.members_named(name, "field"):
                    return self._typed_from_view(view, owner)
        return None

    def _typed_from_view(self, view: MemberView, owner: IndexedType) -> TypedValue:
        t_name = view.value_type
        if t_name is None:
            return UNKNOWN
        if owner.origin == "source":
            base = t_name.rstrip("[]")
            entry = resolve_type_name(
                self.index, owner.unit, owner.decl, base,
                frozenset(type_params_in_scope(self.index, owner.decl)),
            )
        else:
            entry = self.index.get(t_name.rstrip("[]").replace("$", "."))
            if entry is None:
                entry = self.index.get(t_name.rstrip("[]"))
        return TypedValue("value", t_name, entry if not t_name.endswith("[]") else None)

    def _trail(self, value: TypedValue, j, end) -> TypedValue:
        while j < end:
            tok = self.toks[j]
            if tok.kind == OP and tok.text == "[":
                close = self._matching(j, end)
                if close is None:
                    return UNKNOWN
                if value.type_name and value.type_name.endswith("[]"):
                    base = value.type_name[:-2]
                    value = TypedValue("value", base, self._entry_of_name(base.rstrip("[]")))
                else:
                    return UNKNOWN
                j = close + 1
                continue
            if tok.kind != OP or tok.text != ".":
                if tok.kind == OP and tok.text in ("+", "-", "*", "/", "%"):
                    return self._arith(value, j, end)
                return value
            if j + 1 >= end:
                return value
            seg = self.toks[j + 1]
            if seg.kind == KEYWORD and seg.text == "class":
                return TypedValue("value", "java.lang.Class",
                                  self.index.get("java.lang.Class"))
            if seg.kind != IDENT:
                return UNKNOWN
            is_call = j + 2 < end and self.toks[j + 2].is_op("(")
            value = self._hop(value, seg.text, is_call, (j + 2, end))
            if value.kind == "unknown":
                return UNKNOWN
            j = j + 2
            if is_call:
                j = self._skip_group(j, end)
        return value

    def _arith(self, left: TypedValue, j, end) -> TypedValue:
        if self.toks[j].text == "+" and left.type_name == "java.lang.String":
            return left
        right = self.type_of((j + 1, end))
        if "java.lang.String" in (left.type_name, right.type_name) and self.toks[j].text == "+":
            return TypedValue("value", "java.lang.String",
                              self.index.get("java.lang.String"))
        for candidate in ("double", "float", "long"):
            if candidate in (left.type_name, right.type_name):
                return TypedValue("value", candidate)
        if left.type_name == right.type_name:
            return left
        return TypedValue("value", "int")

    def _hop(self, value: TypedValue, name: str, is_call: bool, args_at) -> TypedValue:
        if value.is_array and name == "length" and not is_call:
            return TypedValue("value", "int")
        if value.entry is None:
            if value.kind == "class":
                return UNKNOWN
            return UNKNOWN
        if is_call:
            found = find_member(self.index, value.entry, name, "method", argc=self._argc(args_at))
            if found is None:
                found = find_member(self.index, value.entry, name, "method")
            if found is None:
                return UNKNOWN
            return self._typed_from_view(found[0], found[1])
        found = find_member(self.index, value.entry, name, "field")
        if found is not None:
            return self._typed_from_view(found[0], found[1])
        if value.kind == "class":
            nested = self.index.get(value.entry.fqn + "$" + name)
            if nested is not None:
                return TypedValue("class", nested.fqn, nested)
        return UNKNOWN

    def _argc(self, args_at) -> Optional[int]:
        j, end = args_at
        if j >= end or not self.toks[j].is_op("("):
            return None
        close = self._matching(j, end)
        if close is None:
            return None
        if close == j + 1:
            return 0
        depth = 0
        count = 1
        for k in range(j + 1, close):
            t = self.toks[k]
            if t.kind == OP:
                if t.text in "([{":
                    depth += 1
                elif t.text in ")]}":
                    depth -= 1
                elif t.text == "," and depth == 0:
                    count += 1
        return count


# --- reference resolution ----------------------------------------------------


def resolve(index: SymbolIndex, ref: Reference) -> Resolution:
    """Resolve one reference. Returns an unresolved record rather than
    raising, so stub generation can proceed."""
    unit, decl, member = ref.unit, ref.enclosing_type, ref.member_decl
    scan = None
    if member is not None and member.kind in (
        "method", "constructor", "initializer", "field", "enum_constant",
    ):
        scan = scan_of(index, unit, decl, member)
    typer = ExprTyper(index, unit, decl, member, scan)

    if ref.kind in ("type_use", "catch_type", "annotation_use", "cast"):
        name = ref.type.name if ref.type is not None else ref.name
        if is_builtin_type_name(name, typer.tparams):
            return BUILTIN
        entry = resolve_type_name(index, unit, decl, name, typer.tparams)
        if entry is None:
            return Resolution.unresolved(ref)
        return resolution_for_type(entry)

    if ref.kind == "object_creation":
        entry = resolve_type_name(index, unit, decl, ref.type.name, typer.tparams)
        if entry is None:
            return Resolution.unresolved(ref)
        argc = len(ref.args or [])
        if entry.origin == "source":
            ctors = entry.constructors()
            if not ctors:
                return Resolution.internal_type(entry.fqn)
            found = find_member(
                index, entry, "<init>", "constructor", argc,
                _arg_type_names(typer, ref),
            )
            if found is None or found[1].fqn != entry.fqn:
                found = next(((c, entry) for c in ctors if _arity_ok(c, argc)), None)
            if found is None:
                return Resolution.unresolved(ref)
            view = found[0]
            return Resolution.internal_member(view.signature(), view.decl, entry.fqn)
        return resolution_for_type(entry)

    if ref.kind == "super_ctor_call":
        own = index.get(unit.fqn(decl))
        sup = _class_super(index, own) if own else None
        if sup is None:
            return Resolution.jdk("java.lang.Object")
        if isinstance(sup, str):
            return Resolution.unresolved(ref)
        if sup.origin == "source":
            found = find_member(index, sup, "<init>", "constructor", len(ref.args or []))
            if found is not None and found[0].decl is not None:
                return Resolution.internal_member(
                    found[0].signature(), found[0].decl, sup.fqn
                )
            return Resolution.internal_type(sup.fqn)
        return resolution_for_type(sup)

    if ref.kind in ("foreach_iterable", "try_resource", "throw"):
        value = typer.type_of(ref.receiver) if ref.receiver else UNKNOWN
        if ref.kind == "foreach_iterable" and value.is_array:
            return BUILTIN
        if value.entry is None:
            return Resolution.unresolved(ref)
        wanted = {"foreach_iterable": "iterator", "try_resource": "close"}.get(ref.kind)
        if wanted and value.entry.origin == "source":
            found = find_member(index, value.entry, wanted, "method", 0)
            if found is not None and found[0].decl is not None:
                return Resolution.internal_member(
                    found[0].signature(), found[0].decl, found[1].fqn
                )
        return resolution_for_type(value.entry)

    if ref.kind == "method_call":
        return _resolve_call(index, typer, ref)
    if ref.kind == "field_access":
        return _resolve_field(index, typer, ref)
    return BUILTIN


def _class_super(index, entry: IndexedType):
    """The (single) superclass entry of a source class; written name string
    if it does not resolve; None when extending Object."""
    if entry is None or entry.origin != "source":
        return None
    ext = entry.decl.extends_list
    if entry.decl.kind != "class" or not ext:
        return None
    tparams = frozenset(type_params_in_scope(index, entry.decl))
    sup = resolve_type_name(index, entry.unit, entry.decl, ext[0].name, tparams)
    return sup if sup is not None else ext[0].name


def _arg_type_names(typer: ExprTyper, ref: Reference) -> list[Optional[str]]:
    out = []
    for rng in ref.args or []:
        value = typer.type_of(rng)
        out.append(value.type_name if value.kind == "value" else None)
    return out


def _member_resolution(view: MemberView, owner: IndexedType) -> Resolution:
    if owner.origin == "source":
        return Resolution.internal_member(view.signature(), view.decl, owner.fqn)
    if owner.origin == "classpath":
        return Resolution.classpath(owner.fqn, view.signature())
    return Resolution.jdk(owner.fqn, view.signature())


def _resolve_call(index, typer: ExprTyper, ref: Reference) -> Resolution:
    argc = len(ref.args or [])
    arg_names = _arg_type_names(typer, ref)
    unit, decl = ref.unit, ref.enclosing_type

    if ref.receiver is None:
        if ref.name in ("<init>", "<enum_init>"):  # this(...) / enum constant
            own = index.get(unit.fqn(decl))
            if own is not None:
                found = find_member(index, own, "<init>", "constructor", argc, arg_names)
                if found is not None and found[0].decl is not None:
                    return Resolution.internal_member(
                        found[0].signature(), found[0].decl, own.fqn
                    )
            return BUILTIN
        for scope in index.enclosing_chain(decl):
            scope_entry = index.get(index.unit_of(scope).fqn(scope))
            if scope_entry is None:
                continue
            found = find_member(index, scope_entry, ref.name, "method", argc, arg_names)
            if found is not None:
                return _member_resolution(*found)
        hit = _static_import_member(index, unit, ref.name, "method", argc)
        if hit is not None:
            return hit
        return Resolution.unresolved(ref)

    recv_text = _range_text(ref.unit, ref.receiver)
    if recv_text == "super":
        own = index.get(unit.fqn(decl))
        if own is not None:
            for sup in super_entries(index, own):
                found = find_member(index, sup, ref.name, "method", argc, arg_names)
                if found is not None:
                    return _member_resolution(*found)
        return Resolution.unresolved(ref)

    value = typer.type_of(ref.receiver)
    if value.entry is None:
        return Resolution.unresolved(ref)
    found = find_member(index, value.entry, ref.name, "method", argc, arg_names)
    if found is None:
        found = find_member(index, value.entry, ref.name, "method")
    if found is None:
        return Resolution.unresolved(ref)
    return _member_resolution(*found)


def _resolve_field(index, typer: ExprTyper, ref: Reference) -> Resolution:
    unit, decl = ref.unit, ref.enclosing_type
    if ref.receiver is None:
        for scope in index.enclosing_chain(decl):
            scope_entry = index.get(index.unit_of(scope).fqn(scope))
            if scope_entry is None:
                continue
            found = find_member(index, scope_entry, ref.name, "field")
            if found is not None:
                return _member_resolution(*found)
        hit = _static_import_member(index, unit, ref.name, "field", None)
        if hit is not None:
            return hit
        return Resolution.unresolved(ref)

    recv_text = _range_text(ref.unit, ref.receiver)
    if recv_text == "super":
        own = index.get(unit.fqn(decl))
        if own is not None:
            for sup in super_entries(index, own):
                found = find_member(index, sup, ref.name, "field")
                if found is not None:
                    return _member_resolution(*found)
        return Resolution.unresolved(ref)

    value = typer.type_of(ref.receiver)
    if value.is_array and ref.name == "length":
        return BUILTIN
    if value.entry is None:
        return Resolution.unresolved(ref)
    found = find_member(index, value.entry, ref.name, "field")
    if found is None and value.kind == "class":
        nested = index.get(value.entry.fqn + "$" + ref.name)
        if nested is not None:
            return resolution_for_type(nested)
    if found is None:
        return Resolution.unresolved(ref)
    return _member_resolution(*found)


def _static_import_member(index, unit, name, kind, argc) -> Optional[Resolution]:
    for imp in unit.imports:
        if not imp.static_import:
            continue
        if imp.on_demand:
            owner = index.get(imp.path)
        elif imp.last_segment == name:
            owner = index.get(imp.path.rsplit(".", 1)[0])
        else:
            continue
        if owner is None:
            continue
        found = find_member(index, owner, name, kind, argc)
        if found is not None:
            return _member_resolution(*found)
    return None


def _range_text(unit, rng) -> str:
    return "".join(t.text for t in unit.tokens[rng[0] : rng[1]])

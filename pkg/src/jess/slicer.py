"""Slicing: remove everything unmarked, dummy out Keep bodies, and honor the
compilation-preserving exceptions.

Exceptions handled before removal:
  (a) implementations of abstract supertype methods stay (body sliced) when
      the abstract declaration stays or lives in a class file / the JDK;
  (b) the single abstract method of a retained functional interface stays;
  (c) constructors whose superclass lacks a no-arg constructor keep an
      explicit super(...) call with dummy arguments;
  (d) final fields always keep an initialization: constant initializers
      verbatim, everything else a non-constant dummy so that a constant
      never appears where the original had none;
  (e) on-demand imports are always retained.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from jess.symbols.index import IndexedType, SymbolIndex
from jess.symbols.marking import KEEP, KEEP_ALL, MarkingTable, propagate
from jess.symbols.resolve import (
    find_member,
    hierarchy,
    resolve_type_name,
    scan_of,
    super_entries,
    type_params_in_scope,
)
from jess.syntax.ast import CompilationUnit, MemberDecl, ParsedType, TypeDecl
from jess.syntax.printer import OMIT, VERBATIM, print_unit
from jess.syntax.tokens import CHAR, IDENT, KEYWORD, NUMBER, OP, STRING

_WORD = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")


# --- dummy values -----------------------------------------------------------

_DUMMY_LITERALS = {
    "int": "0",
    "long": "0L",
    "float": "0.0f",
    "double": "0.0d",
    "short": "(short)0",
    "byte": "(byte)0",
    "char": "(char)0",
    "boolean": "false",
}

# Non-constant spellings: a dummy initializer must never turn a final field
# into a compile-time constant the compiler would inline at use sites.
_DUMMY_NONCONSTANT = {
    "int": "Integer.valueOf(0)",
    "long": "Long.valueOf(0L)",
    "float": "Float.valueOf(0.0f)",
    "double": "Double.valueOf(0.0d)",
    "short": "Short.valueOf((short)0)",
    "byte": "Byte.valueOf((byte)0)",
    "char": "Character.valueOf((char)0)",
    "boolean": "Boolean.valueOf(false)",
}


def _is_string_type(t: ParsedType) -> bool:
    return t.dims == 0 and t.name in ("String", "java.lang.String")


def dummy_value(t: ParsedType) -> str:
    if t.dims == 0 and t.is_primitive:
        return _DUMMY_LITERALS[t.name]
    if _is_string_type(t):
        return '"dummy"'
    return "null"


def dummy_nonconstant_value(t: ParsedType) -> str:
    if t.dims == 0 and t.is_primitive:
        return _DUMMY_NONCONSTANT[t.name]
    if _is_string_type(t):
        return 'String.valueOf("dummy")'
    return "null"


def dummy_body(return_type) -> str:
    """Replacement body for a sliced method: a single dummy return."""
    if return_type is None or (return_type.name == "void" and return_type.dims == 0):
        return "{}"
    return "{ return " + dummy_value(return_type) + "; }"


# --- sliced output ----------------------------------------------------------


@dataclass
class SlicedUnit:
    unit: CompilationUnit
    text: str
    removed_members: list[str] = field(default_factory=list)
    removed_types: list[str] = field(default_factory=list)
    removed_imports: list[str] = field(default_factory=list)
    dummy_bodies: list[tuple[str, str]] = field(default_factory=list)
    kept_members: list[str] = field(default_factory=list)
    droppable: bool = False


def slice_unit(
    unit: CompilationUnit,
    table: MarkingTable,
    index: SymbolIndex,
    directives: dict | None = None,
    extra_imports: tuple[str, ...] = (),
) -> SlicedUnit:
    directives = directives or {}
    result = SlicedUnit(unit=unit, text="")

    retained_types: dict[int, bool] = {}

    def type_retained(t: TypeDecl) -> bool:
        cached = retained_types.get(id(t))
        if cached is not None:
            return cached
        fqn = unit.fqn(t)
        keep = table.is_type_retained(fqn) or any(
            type_retained(n) for n in t.nested_types()
        )
        retained_types[id(t)] = keep
        return keep

    plan: dict[str, tuple] = {}

    def plan_type(t: TypeDecl):
        for m in t.members:
            if m.kind == "nested_type":
                if not type_retained(m.nested):
                    result.removed_types.append(unit.fqn(m.nested))
                else:
                    plan_type(m.nested)
                continue
            marking = table.marking_of(m.signature)
            if m.kind == "enum_constant":
                plan[m.signature] = VERBATIM
                result.kept_members.append(m.signature)
                continue
            if marking is None:
                plan[m.signature] = OMIT
                result.removed_members.append(m.signature)
                continue
            result.kept_members.append(m.signature)
            override = directives.get(m.signature)
            if override is not None:
                plan[m.signature] = override
                if override[0] == "dummy_body":
                    result.dummy_bodies.append((m.signature, override[1]))
                continue
            if marking == KEEP_ALL:
                plan[m.signature] = VERBATIM
                continue
            # Keep: signature stays, content goes
            if m.kind in ("method", "constructor"):
                if m.body_span is None:
                    plan[m.signature] = VERBATIM
                else:
                    body = "{}" if m.kind == "constructor" else dummy_body(m.return_type)
                    plan[m.signature] = ("dummy_body", body)
                    result.dummy_bodies.append((m.signature, body))
            elif m.kind == "field":
                if m.initializer_tokens is None:
                    plan[m.signature] = VERBATIM
                else:
                    plan[m.signature] = ("field_no_init",)
            else:  # initializer marked Keep: no signature to preserve
                plan[m.signature] = OMIT
                result.kept_members.remove(m.signature)
                result.removed_members.append(m.signature)

    for t in unit.types:
        if type_retained(t):
            plan_type(t)
        else:
            result.removed_types.append(unit.fqn(t))

    if not any(type_retained(t) for t in unit.types):
        result.droppable = True
        result.removed_imports = [i.path for i in unit.imports]
        return result

    # two-phase import retention: render without imports, keep the single
    # imports whose last segment still occurs as a word
    draft = print_unit(
        unit,
        member_plan=plan,
        type_keep=type_retained,
        import_keep=lambda imp: False,
    )
    words = set(_WORD.findall(draft))

    def import_keep(imp) -> bool:
        if imp.on_demand:
            return True
        return imp.last_segment in words

    for imp in unit.imports:
        if not import_keep(imp):
            result.removed_imports.append(imp.path)

    result.text = print_unit(
        unit,
        member_plan=plan,
        type_keep=type_retained,
        import_keep=import_keep,
        extra_imports=extra_imports,
    )
    return result


# --- slicing exceptions -----------------------------------------------------


def apply_exceptions(
    index: SymbolIndex,
    table: MarkingTable,
    unresolved: list,
) -> dict[str, tuple]:
    """Adjust markings and produce per-member body directives.  New Keep
    markings feed back through reference propagation until stable."""
    directives: dict[str, tuple] = {}
    while True:
        new_sigs: list[str] = []
        _retain_abstract_impls(index, table, new_sigs)
        _retain_functional_sams(index, table, new_sigs)
        _super_ctor_preludes(index, table, directives, new_sigs)
        if not new_sigs:
            break
        propagate(index, table, new_sigs, unresolved)
    _final_field_directives(index, table, directives)
    return directives


def _retained_source_entries(index: SymbolIndex, table: MarkingTable):
    for fqn in table.retained_type_fqns():
        entry = index.get(fqn)
        if entry is not None and entry.origin == "source":
            yield entry


def _retain_abstract_impls(index, table, new_sigs):
    for entry in _retained_source_entries(index, table):
        decl = entry.decl
        if decl.kind != "class" or "abstract" in decl.modifiers:
            continue
        for owner in list(hierarchy(index, entry))[1:]:
            for view in owner.members():
                if view.kind != "method" or not view.abstract:
                    continue
                if owner.origin == "source":
                    decl_kept = table.marking_of(view.signature()) is not None
                    if not decl_kept:
                        continue
                impl = _find_implementation(index, entry, view)
                if impl is None:
                    continue
                sig = impl.signature()
                if table.marking_of(sig) is None:
                    if table.mark_member(
                        sig, KEEP, view.signature(),
                        "implements retained abstract method",
                    ):
                        new_sigs.append(sig)


def _find_implementation(index, entry, abstract_view):
    for owner in hierarchy(index, entry):
        if owner.origin != "source":
            return None
        for view in owner.members_named(abstract_view.name, "method"):
            if view.arity == abstract_view.arity and not view.abstract:
                return view
    return None


def _retain_functional_sams(index, table, new_sigs):
    for entry in _retained_source_entries(index, table):
        if entry.decl.kind != "interface":
            continue
        abstracts = [
            v for v in entry.members() if v.kind == "method" and v.abstract
        ]
        if len(abstracts) != 1:
            continue
        sig = abstracts[0].signature()
        if table.marking_of(sig) is None:
            if table.mark_member(sig, KEEP, entry.fqn, "functional interface method"):
                new_sigs.append(sig)


def _super_ctor_preludes(index, table, directives, new_sigs):
    for entry in _retained_source_entries(index, table):
        decl = entry.decl
        if decl.kind != "class" or not decl.extends_list:
            continue
        tparams = frozenset(type_params_in_scope(index, decl))
        sup = resolve_type_name(
            index, entry.unit, decl, decl.extends_list[0].name, tparams
        )
        if sup is None or sup.has_noarg_constructor():
            continue
        ctors = [m for m in decl.members if m.kind == "constructor"]
        if not ctors:
            continue
        kept = [m for m in ctors if table.marking_of(m.signature) is not None]
        if not kept:
            first = ctors[0]
            if table.mark_member(
                first.signature, KEEP, entry.fqn,
                "superclass lacks a no-arg constructor",
            ):
                new_sigs.append(first.signature)
            kept = [first]
        for ctor in kept:
            if table.marking_of(ctor.signature) == KEEP_ALL:
                continue
            if ctor.signature in directives:
                continue
            super_view = _pick_super_ctor(index, entry, sup, ctor)
            if super_view is None:
                continue
            args = ", ".join(
                dummy_value(ParsedType(
                    name=p.rstrip("[]"), dims=p.count("[]"),
                ))
                for p in super_view.param_types or []
            )
            directives[ctor.signature] = ("dummy_body", "{ super(" + args + "); }")
            if super_view.decl is not None:
                sig = super_view.signature()
                if table.marking_of(sig) is None:
                    if table.mark_member(sig, KEEP, ctor.signature, "super constructor"):
                        new_sigs.append(sig)


def _pick_super_ctor(index, entry, sup: IndexedType, ctor: MemberDecl):
    explicit_arity = _explicit_super_arity(entry.unit, ctor)
    ctors = sup.constructors()
    if not ctors:
        return None
    if explicit_arity is not None:
        matches = [v for v in ctors if v.arity == explicit_arity]
        if matches:
            return matches[0]
    return min(ctors, key=lambda v: v.arity)


def _explicit_super_arity(unit, ctor: MemberDecl):
    if ctor.body_tokens is None:
        return None
    toks = unit.tokens
    t0, t1 = ctor.body_tokens
    for i in range(t0, t1 - 1):
        if toks[i].is_kw("super") and toks[i + 1].is_op("("):
            depth = 0
            count = 0
            saw_any = False
            for j in range(i + 1, t1):
                t = toks[j]
                if t.kind == OP:
                    if t.text in "([{":
                        depth += 1
                        if depth == 1:
                            continue
                    elif t.text in ")]}":
                        depth -= 1
                        if depth == 0:
                            return count + 1 if saw_any else 0
                    elif t.text == "," and depth == 1:
                        count += 1
                        continue
                if depth >= 1:
                    saw_any = True
            return None
    return None


def _final_field_directives(index, table, directives):
    for entry in _retained_source_entries(index, table):
        decl = entry.decl
        iface = decl.kind in ("interface", "annotation")
        for m in decl.members:
            if m.kind != "field":
                continue
            if table.marking_of(m.signature) != KEEP:
                continue
            if m.initializer_tokens is None:
                continue
            if not (m.is_final or iface):
                continue
            if is_constant_expression(entry.unit, decl, m.initializer_tokens):
                directives[m.signature] = ("field_init_verbatim",)
            elif _assigned_in_kept_body(index, table, entry, m):
                directives[m.signature] = ("field_no_init",)
            else:
                directives[m.signature] = (
                    "field_init", dummy_nonconstant_value(m.field_type)
                )


def _assigned_in_kept_body(index, table, entry, field_member) -> bool:
    want_static = field_member.is_static
    for m in entry.decl.members:
        if table.marking_of(m.signature) != KEEP_ALL:
            continue
        if m.kind not in ("constructor", "initializer"):
            continue
        if m.kind == "initializer" and m.is_static != want_static:
            continue
        scan = scan_of(index, entry.unit, entry.decl, m)
        for ref in scan.refs:
            if (
                ref.kind == "field_access"
                and ref.name == field_member.name
                and ref.use == ("assign_target",)
            ):
                return True
    return False


# --- constant expressions ----------------------------------------------------

_CONST_OPS = {
    "+", "-", "*", "/", "%", "<<", "<", ">", "&", "|", "^", "~", "!", "(", ")",
    "&&", "||",
}


def is_constant_expression(unit, decl: TypeDecl, rng, _depth=0) -> bool:
    """Literals, unary and binary arithmetic/shift/bitwise/concat, parens,
    and references to other final constant fields in the same unit."""
    if _depth > 8:
        return False
    toks = unit.tokens
    i, end = rng
    if i >= end:
        return False
    while i < end:
        tok = toks[i]
        if tok.kind in (NUMBER, STRING, CHAR):
            i += 1
            continue
        if tok.kind == KEYWORD and tok.text in ("true", "false"):
            i += 1
            continue
        if tok.kind == OP and tok.text in _CONST_OPS:
            i += 1
            continue
        if tok.kind == IDENT:
            parts = [tok.text]
            j = i + 1
            while j + 1 < end and toks[j].is_op(".") and toks[j + 1].kind == IDENT:
                parts.append(toks[j + 1].text)
                j += 2
            if j < end and toks[j].is_op("("):
                return False
            if not _is_same_unit_constant(unit, decl, parts, _depth):
                return False
            i = j
            continue
        return False
    return True


def _is_same_unit_constant(unit, decl: TypeDecl, parts, depth) -> bool:
    if len(parts) == 1:
        targets = [decl]
    else:
        targets = [t for t in unit.all_types() if t.name == parts[-2]]
    name = parts[-1]
    for t in targets:
        iface = t.kind in ("interface", "annotation")
        for m in t.members:
            if m.kind == "field" and m.name == name and (m.is_final or iface):
                if m.initializer_tokens is None:
                    return False
                return is_constant_expression(
                    unit, t, m.initializer_tokens, depth + 1
                )
    return False

"""Re-printing of compilation units.

Members render byte-for-byte from their original spans unless a directive
says otherwise; the slicer supplies directives for removed members, dummy
bodies and stripped field initializers.  JavaDoc sits outside member spans,
so it never survives re-printing."""

from __future__ import annotations

from typing import Callable, Optional

from jess.syntax.ast import CompilationUnit, MemberDecl, TypeDecl

# directives, keyed by member signature:
#   ("verbatim",)                default
#   ("omit",)
#   ("dummy_body", "{ return 0; }")
#   ("field_no_init",)
#   ("field_init", "Integer.valueOf(0)")
#   ("field_init_verbatim",)     explicit form of the default for fields
VERBATIM = ("verbatim",)
OMIT = ("omit",)


def print_unit(
    unit: CompilationUnit,
    member_plan: Optional[dict[str, tuple]] = None,
    type_keep: Optional[Callable[[TypeDecl], bool]] = None,
    import_keep: Optional[Callable] = None,
    extra_imports: tuple[str, ...] = (),
) -> str:
    plan = member_plan or {}
    out: list[str] = []
    if unit.package_name:
        out.append(f"package {unit.package_name};")
        out.append("")
    import_lines = []
    for imp in unit.imports:
        if import_keep is None or import_keep(imp):
            import_lines.append(imp.text())
    import_lines.extend(extra_imports)
    if import_lines:
        out.extend(import_lines)
        out.append("")
    for t in unit.types:
        if type_keep is not None and not type_keep(t):
            continue
        out.extend(_render_type(unit, t, plan, type_keep, depth=0))
        out.append("")
    while out and out[-1] == "":
        out.pop()
    return "\n".join(out) + "\n"


def _bytes(unit: CompilationUnit, start: int, end: int) -> str:
    return unit.source_text[start:end].decode("utf-8")


def _render_type(unit, t: TypeDecl, plan, type_keep, depth) -> list[str]:
    pad = "    " * depth
    header = _bytes(unit, t.span.start_offset, t.header_end_offset).rstrip()
    lines = [pad + header + " {"]
    groups: list[list[str]] = []
    constants = [m for m in t.members if m.kind == "enum_constant"]
    others = [m for m in t.members if m.kind != "enum_constant"]

    if t.kind == "enum":
        kept = [m for m in constants if plan.get(m.signature, VERBATIM) != OMIT]
        const_text = ",\n".join(
            "    " * (depth + 1) + _bytes(unit, m.span.start_offset, m.span.end_offset)
            for m in kept
        )
        if const_text:
            groups.append([const_text + ";"])
        elif _has_kept(others, plan, type_keep):
            groups.append(["    " * (depth + 1) + ";"])

    for m in others:
        rendered = _render_member(unit, m, plan, type_keep, depth + 1)
        if rendered:
            groups.append(rendered)
    for i, group in enumerate(groups):
        if i:
            lines.append("")
        lines.extend(group)
    lines.append(pad + "}")
    return lines


def _has_kept(members, plan, type_keep) -> bool:
    for m in members:
        if m.kind == "nested_type":
            if type_keep is None or type_keep(m.nested):
                return True
        elif plan.get(m.signature, VERBATIM) != OMIT:
            return True
    return False


def _render_member(unit, m: MemberDecl, plan, type_keep, depth) -> list[str]:
    pad = "    " * depth
    if m.kind == "nested_type":
        if type_keep is not None and not type_keep(m.nested):
            return []
        return _render_type(unit, m.nested, plan, type_keep, depth)
    directive = plan.get(m.signature, VERBATIM)
    if directive == OMIT:
        return []
    if directive == VERBATIM or directive == ("field_init_verbatim",):
        if m.kind == "field" and not m.declarator_first:
            return [pad + _field_from_parts(unit, m, _init_text(unit, m))]
        return [pad + _bytes(unit, m.span.start_offset, m.span.end_offset)
                + (";" if m.kind == "field" else "")]
    if directive[0] == "dummy_body":
        header = _bytes(unit, m.span.start_offset, m.header_end_offset).rstrip()
        return [pad + header + " " + directive[1]]
    if directive == ("field_no_init",):
        if m.declarator_first:
            return [pad + _bytes(unit, m.span.start_offset, m.header_end_offset) + ";"]
        return [pad + _field_from_parts(unit, m, None)]
    if directive[0] == "field_init":
        if m.declarator_first:
            head = _bytes(unit, m.span.start_offset, m.header_end_offset)
        else:
            head = _field_from_parts(unit, m, None)[:-1]
        return [pad + head + " = " + directive[1] + ";"]
    raise ValueError(f"unknown print directive {directive!r} for {m.signature}")


def _init_text(unit, m: MemberDecl):
    if m.initializer_tokens is None:
        return None
    i0, i1 = m.initializer_tokens
    if i1 <= i0:
        return None
    return _bytes(unit, unit.tokens[i0].start, unit.tokens[i1 - 1].end)


def _field_from_parts(unit, m: MemberDecl, init: Optional[str]) -> str:
    prefix = _bytes(unit, *m.type_prefix_span).rstrip()
    text = f"{prefix} {m.name}" + "[]" * m.declarator_dims
    if init is not None:
        text += " = " + init
    return text + ";"

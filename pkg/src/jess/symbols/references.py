"""Reference extraction per member and marking kind.

Signature references (return/parameter/throws/bound/annotation types) are
always extracted.  Bodies of methods and constructors contribute only under
Keep-All; field initializers likewise."""

from __future__ import annotations

from jess.symbols.model import Reference
from jess.symbols.scan import scan_member_body
from jess.syntax.ast import CompilationUnit, MemberDecl, ParsedType, TypeDecl

KEEP = "keep"
KEEP_ALL = "keep_all"


def _type_refs(unit, decl, member, parsed: ParsedType, site, out):
    if parsed is None or parsed.wildcard:
        return
    if not parsed.is_primitive and parsed.name != "var":
        out.append(
            Reference(
                kind="type_use",
                name=parsed.name,
                site=site,
                unit=unit,
                enclosing_type=decl,
                enclosing_member=member.signature if member else None,
                member_decl=member,
                type=parsed,
            )
        )
    for arg in parsed.type_args:
        _type_refs(unit, decl, member, arg, site, out)


def _annotation_refs(unit, decl, member, names, site, out):
    for name in names:
        out.append(
            Reference(
                kind="annotation_use",
                name=name,
                site=site,
                unit=unit,
                enclosing_type=decl,
                enclosing_member=member.signature if member else None,
                member_decl=member,
                type=ParsedType(name=name),
            )
        )


def extract_references(
    index,
    unit: CompilationUnit,
    decl: TypeDecl,
    member: MemberDecl,
    marking: str,
) -> list[Reference]:
    from jess.symbols.resolve import scan_of

    refs: list[Reference] = []
    site = member.span

    if member.kind in ("method", "constructor"):
        _annotation_refs(unit, decl, member, member.annotations, site, refs)
        if member.return_type is not None:
            _type_refs(unit, decl, member, member.return_type, site, refs)
        for p_type, _ in member.parameters:
            _type_refs(unit, decl, member, p_type, site, refs)
        for t in member.throws_list:
            _type_refs(unit, decl, member, t, site, refs)
        for t in member.type_param_bounds:
            _type_refs(unit, decl, member, t, site, refs)
        if marking == KEEP_ALL and member.body_tokens is not None:
            refs.extend(scan_of(index, unit, decl, member).refs)
        return refs

    if member.kind == "field":
        _annotation_refs(unit, decl, member, member.annotations, site, refs)
        _type_refs(unit, decl, member, member.field_type, site, refs)
        if marking == KEEP_ALL and member.initializer_tokens is not None:
            refs.extend(scan_of(index, unit, decl, member).refs)
        return refs

    if member.kind == "initializer":
        if marking == KEEP_ALL and member.body_tokens is not None:
            refs.extend(scan_member_body(unit, decl, member).refs)
        return refs

    if member.kind == "enum_constant":
        _annotation_refs(unit, decl, member, member.annotations, site, refs)
        if member.constant_args is not None:
            refs.extend(scan_of(index, unit, decl, member).refs)
            # the constant invokes the enum's own constructor
            a0, a1 = member.constant_args
            args = _split_ranges(unit, a0, a1)
            refs.append(
                Reference(
                    kind="method_call",
                    name="<enum_init>",
                    site=site,
                    unit=unit,
                    enclosing_type=decl,
                    enclosing_member=member.signature,
                    member_decl=member,
                    args=args,
                )
            )
        return refs

    return refs


def _split_ranges(unit, open_i, close_after):
    close = close_after - 1
    args = []
    depth = 0
    start = open_i + 1
    for j in range(open_i + 1, close):
        t = unit.tokens[j]
        if t.kind == "op":
            if t.text in "([{":
                depth += 1
            elif t.text in ")]}":
                depth -= 1
            elif t.text == "," and depth == 0:
                args.append((start, j))
                start = j + 1
    if start < close:
        args.append((start, close))
    return args


def extract_type_header_references(unit, decl: TypeDecl) -> list[Reference]:
    """References a retained type's declaration line makes: supertypes,
    type-parameter bounds, annotations."""
    refs: list[Reference] = []
    site = decl.span
    for t in decl.extends_list + decl.implements_list:
        _type_refs(unit, decl, None, t, site, refs)
    for t in decl.type_param_bounds:
        _type_refs(unit, decl, None, t, site, refs)
    _annotation_refs(unit, decl, None, decl.annotations, site, refs)
    return refs

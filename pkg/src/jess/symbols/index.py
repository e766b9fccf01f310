"""Whole-code-base symbol index: source types, classpath classes, JDK baseline."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from jess.classfile.model import (
    ACC_ABSTRACT,
    ACC_INTERFACE,
    ACC_STATIC,
    ArchiveUnreadable,
    ClassModel,
    MalformedClassFile,
    UnsupportedMajorVersion,
)
from jess.classfile.parse import descriptor_to_names, iter_classpath_classes, parse_class
from jess.symbols.jdk import JDK_TYPES
from jess.syntax.ast import CompilationUnit, MemberDecl, TypeDecl


class ClasspathEntryUnreadable(Warning):
    def __init__(self, path, reason=""):
        super().__init__(f"classpath entry unreadable: {path} ({reason})")
        self.path = path


@dataclass
class MemberView:
    """Uniform view of a member regardless of backing (source/classpath/JDK)."""

    name: str
    kind: str  # method|constructor|field
    param_types: Optional[list[str]]  # erased written names; None for fields
    value_type: Optional[str]  # return type / field type, written name
    static: bool
    abstract: bool
    owner_fqn: str
    decl: Optional[MemberDecl] = None  # source-backed only

    @property
    def arity(self) -> int:
        return len(self.param_types or [])

    def signature(self) -> str:
        if self.kind == "field":
            return f"{self.owner_fqn}#{self.name}"
        shown = "<init>" if self.kind == "constructor" else self.name
        return f"{self.owner_fqn}#{shown}({','.join(self.param_types or [])})"


@dataclass
class IndexedType:
    fqn: str
    origin: str  # source|classpath|jdk
    unit: Optional[CompilationUnit] = None
    decl: Optional[TypeDecl] = None
    model: Optional[ClassModel] = None
    jdk: Optional[dict] = None

    @property
    def kind(self) -> str:
        if self.origin == "source":
            return self.decl.kind
        if self.origin == "classpath":
            return "interface" if self.model.access_flags & ACC_INTERFACE else "class"
        return self.jdk["kind"]

    @property
    def is_interface(self) -> bool:
        return self.kind in ("interface", "annotation")

    @property
    def simple_name(self) -> str:
        return self.fqn.replace("$", ".").rsplit(".", 1)[-1]

    def super_names(self) -> list[str]:
        """Direct supertype names: written names for source, binary names else."""
        if self.origin == "source":
            return [t.name for t in self.decl.extends_list + self.decl.implements_list]
        if self.origin == "classpath":
            out = []
            if self.model.super_class:
                out.append(self.model.super_class.replace("/", "."))
            out.extend(i.replace("/", ".") for i in self.model.interfaces)
            return out
        out = []
        if self.jdk["super"]:
            out.append(self.jdk["super"])
        out.extend(self.jdk["interfaces"])
        return out

    def members(self) -> list[MemberView]:
        if self.origin == "source":
            return _source_members(self)
        if self.origin == "classpath":
            return _classpath_members(self)
        return _jdk_members(self)

    def members_named(self, name: str, kind: Optional[str] = None) -> list[MemberView]:
        return [
            v for v in self.members()
            if v.name == name and (kind is None or v.kind == kind)
        ]

    def constructors(self) -> list[MemberView]:
        return [v for v in self.members() if v.kind == "constructor"]

    def has_noarg_constructor(self) -> bool:
        ctors = self.constructors()
        if not ctors:
            return True  # implicit default constructor
        return any(v.arity == 0 for v in ctors)


def _source_members(entry: IndexedType) -> list[MemberView]:
    out = []
    iface = entry.decl.kind in ("interface", "annotation")
    for m in entry.decl.members:
        if m.kind == "method":
            abstract = m.is_abstract or (
                iface
                and m.body_span is None
                and "default" not in m.modifiers
                and "static" not in m.modifiers
            )
            out.append(
                MemberView(
                    name=m.name,
                    kind="method",
                    param_types=[t.erased() for t, _ in m.parameters],
                    value_type=m.return_type.erased() if m.return_type else "void",
                    static=m.is_static or (iface and "static" in m.modifiers),
                    abstract=abstract,
                    owner_fqn=entry.fqn,
                    decl=m,
                )
            )
        elif m.kind == "constructor":
            out.append(
                MemberView(
                    name="<init>",
                    kind="constructor",
                    param_types=[t.erased() for t, _ in m.parameters],
                    value_type=None,
                    static=False,
                    abstract=False,
                    owner_fqn=entry.fqn,
                    decl=m,
                )
            )
        elif m.kind == "field":
            out.append(
                MemberView(
                    name=m.name,
                    kind="field",
                    param_types=None,
                    value_type=m.field_type.erased() if m.field_type else None,
                    static=m.is_static or iface,
                    abstract=False,
                    owner_fqn=entry.fqn,
                    decl=m,
                )
            )
        elif m.kind == "enum_constant":
            out.append(
                MemberView(
                    name=m.name,
                    kind="field",
                    param_types=None,
                    value_type=entry.decl.name,
                    static=True,
                    abstract=False,
                    owner_fqn=entry.fqn,
                    decl=m,
                )
            )
    return out


def _classpath_members(entry: IndexedType) -> list[MemberView]:
    out = []
    for m in entry.model.methods:
        params, ret = descriptor_to_names(m.descriptor)
        kind = "constructor" if m.name == "<init>" else "method"
        out.append(
            MemberView(
                name=m.name,
                kind=kind,
                param_types=params,
                value_type=None if kind == "constructor" else ret,
                static=bool(m.access_flags & ACC_STATIC),
                abstract=bool(m.access_flags & ACC_ABSTRACT),
                owner_fqn=entry.fqn,
            )
        )
    for f in entry.model.fields:
        _, t = descriptor_to_names(f.descriptor)
        out.append(
            MemberView(
                name=f.name,
                kind="field",
                param_types=None,
                value_type=t,
                static=bool(f.access_flags & ACC_STATIC),
                abstract=False,
                owner_fqn=entry.fqn,
            )
        )
    return out


def _jdk_members(entry: IndexedType) -> list[MemberView]:
    out = []
    for name, params, ret, static, abstract in entry.jdk["methods"]:
        out.append(
            MemberView(
                name=name, kind="method", param_types=list(params),
                value_type=ret, static=static, abstract=abstract,
                owner_fqn=entry.fqn,
            )
        )
    for params in entry.jdk["ctors"]:
        out.append(
            MemberView(
                name="<init>", kind="constructor", param_types=list(params),
                value_type=None, static=False, abstract=False,
                owner_fqn=entry.fqn,
            )
        )
    for name, t, static in entry.jdk["fields"]:
        out.append(
            MemberView(
                name=name, kind="field", param_types=None, value_type=t,
                static=static, abstract=False, owner_fqn=entry.fqn,
            )
        )
    return out


class SymbolIndex:
    def __init__(self):
        self.by_fqn: dict[str, IndexedType] = {}
        self.by_simple: dict[str, list[str]] = {}
        self.units: list[CompilationUnit] = []
        self.unit_by_file: dict[str, CompilationUnit] = {}
        self.warnings: list = []
        self.scan_cache: dict = {}
        self._parents: dict[int, Optional[TypeDecl]] = {}
        self._unit_of: dict[int, CompilationUnit] = {}
        self._member_owner: dict[str, tuple] = {}  # sig -> (entry fqn, MemberDecl)

    # --- construction ---------------------------------------------------

    def add_source_unit(self, unit: CompilationUnit):
        self.units.append(unit)
        self.unit_by_file[unit.file] = unit

        def register(decl: TypeDecl, parent):
            fqn = unit.fqn(decl)
            self.by_fqn[fqn] = IndexedType(fqn=fqn, origin="source", unit=unit, decl=decl)
            self.by_simple.setdefault(decl.name, [])
            if fqn not in self.by_simple[decl.name]:
                self.by_simple[decl.name].append(fqn)
            self._parents[id(decl)] = parent
            self._unit_of[id(decl)] = unit
            for m in decl.members:
                if m.kind == "nested_type":
                    register(m.nested, decl)
                else:
                    self._member_owner[m.signature] = (fqn, m)

        for t in unit.types:
            register(t, None)

    def add_classpath_class(self, model: ClassModel):
        fqn = model.binary_name
        if fqn in self.by_fqn and self.by_fqn[fqn].origin == "source":
            return
        self.by_fqn[fqn] = IndexedType(fqn=fqn, origin="classpath", model=model)
        simple = fqn.rsplit(".", 1)[-1].rsplit("$", 1)[-1]
        self.by_simple.setdefault(simple, [])
        if fqn not in self.by_simple[simple]:
            self.by_simple[simple].append(fqn)

    def add_jdk_baseline(self):
        for fqn, data in JDK_TYPES.items():
            if fqn in self.by_fqn:
                continue
            self.by_fqn[fqn] = IndexedType(fqn=fqn, origin="jdk", jdk=data)
            simple = fqn.rsplit(".", 1)[-1]
            self.by_simple.setdefault(simple, [])
            if fqn not in self.by_simple[simple]:
                self.by_simple[simple].append(fqn)

    # --- lookups ----------------------------------------------------------

    def get(self, fqn: str) -> Optional[IndexedType]:
        return self.by_fqn.get(fqn)

    def parent_of(self, decl: TypeDecl) -> Optional[TypeDecl]:
        return self._parents.get(id(decl))

    def unit_of(self, decl: TypeDecl) -> Optional[CompilationUnit]:
        return self._unit_of.get(id(decl))

    def enclosing_chain(self, decl: TypeDecl) -> list[TypeDecl]:
        """decl, its enclosing type, ..., the top-level type."""
        chain = [decl]
        cur = self.parent_of(decl)
        while cur is not None:
            chain.append(cur)
            cur = self.parent_of(cur)
        return chain

    def member_owner(self, sig: str) -> Optional[tuple]:
        return self._member_owner.get(sig)

    def source_entries(self):
        return [e for e in self.by_fqn.values() if e.origin == "source"]


def build_index(units, classpath=()) -> SymbolIndex:
    """Index all source types, every class on the classpath, and the JDK
    baseline.  Unreadable classpath entries are recorded as warnings and
    skipped."""
    index = SymbolIndex()
    for unit in units:
        index.add_source_unit(unit)
    for entry in classpath:
        try:
            for _name, data in iter_classpath_classes(entry):
                try:
                    index.add_classpath_class(parse_class(data))
                except (MalformedClassFile, UnsupportedMajorVersion) as exc:
                    index.warnings.append(
                        ClasspathEntryUnreadable(entry, f"{_name}: {exc}")
                    )
        except ArchiveUnreadable as exc:
            index.warnings.append(ClasspathEntryUnreadable(entry, str(exc)))
    index.add_jdk_baseline()
    return index

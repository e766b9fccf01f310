"""Mark-and-sweep over the reference relation.

Targets are marked Keep-All; every resolvable reference from a marked
member marks its declaration Keep (signature retention); the fixpoint
iterates until no new marks appear.  Unresolvable references are collected
for stub generation."""

from __future__ import annotations

from collections import deque
from typing import Optional

from jess.symbols.index import SymbolIndex
from jess.symbols.model import Reference
from jess.symbols.references import (
    extract_references,
    extract_type_header_references,
)
from jess.symbols.resolve import resolve
from jess.syntax.ast import parse_member_signature

KEEP = "keep"
KEEP_ALL = "keep_all"


class TargetNotFound(Exception):
    def __init__(self, signature):
        super().__init__(f"target not found: {signature}")
        self.signature = signature


class MarkingTable:
    """Member signature -> marking, plus type-level retention markings."""

    def __init__(self):
        self.members: dict[str, str] = {}
        self.types: dict[str, str] = {}
        self.provenance: dict[str, tuple[Optional[str], str]] = {}
        self._members_by_type: dict[str, list[str]] = {}

    def marking_of(self, sig: str) -> Optional[str]:
        return self.members.get(sig)

    def mark_member(self, sig: str, marking: str, source=None, why="") -> bool:
        """Apply a marking; Keep may upgrade to Keep-All, never the reverse.
        Returns True when the effective marking changed."""
        current = self.members.get(sig)
        if current == KEEP_ALL or current == marking:
            return False
        self.members[sig] = marking
        if sig not in self.provenance:
            self.provenance[sig] = (source, why)
        owner = sig.split("#", 1)[0]
        self._members_by_type.setdefault(owner, [])
        if sig not in self._members_by_type[owner]:
            self._members_by_type[owner].append(sig)
        return True

    def mark_type(self, fqn: str, source=None, why="") -> bool:
        if fqn in self.types:
            return False
        self.types[fqn] = KEEP
        if fqn not in self.provenance:
            self.provenance[fqn] = (source, why)
        return True

    def marked_members_of(self, fqn: str) -> list[str]:
        return list(self._members_by_type.get(fqn, []))

    def is_type_retained(self, fqn: str) -> bool:
        return fqn in self.types or bool(self._members_by_type.get(fqn))

    def retained_type_fqns(self) -> list[str]:
        out = list(self.types)
        for fqn in self._members_by_type:
            if fqn not in self.types and self._members_by_type[fqn]:
                out.append(fqn)
        return sorted(set(out))

    def marked_units(self, index: SymbolIndex) -> list:
        files = {}
        for fqn in self.retained_type_fqns():
            entry = index.get(fqn)
            if entry is not None and entry.origin == "source":
                files[entry.unit.file] = entry.unit
        return [files[f] for f in sorted(files)]

    def provenance_chain(self, sig: str) -> list[str]:
        """Walk recorded provenance back to a root target."""
        chain = [sig]
        seen = {sig}
        cur = sig
        while True:
            src = self.provenance.get(cur, (None, ""))[0]
            if src is None or src in seen:
                return chain
            chain.append(src)
            seen.add(src)
            cur = src


def mark_and_sweep(index: SymbolIndex, targets) -> tuple[MarkingTable, list[Reference]]:
    """Fixpoint marking from the given targets (member signatures or bare
    type FQNs, which mark every member of the type Keep-All)."""
    table = MarkingTable()
    unresolved: list[Reference] = []
    seeds: list[str] = []
    for target in targets:
        owner, name, _params = parse_member_signature(target)
        if name is None:
            entry = index.get(target)
            if entry is None or entry.origin != "source":
                raise TargetNotFound(target)
            table.mark_type(entry.fqn, None, "target (type-level)")
            for m in entry.decl.members:
                if m.kind == "nested_type":
                    continue
                if table.mark_member(m.signature, KEEP_ALL, None, "target"):
                    seeds.append(m.signature)
        else:
            hit = index.member_owner(target)
            if hit is None:
                raise TargetNotFound(target)
            if table.mark_member(target, KEEP_ALL, None, "target"):
                seeds.append(target)
    propagate(index, table, seeds, unresolved)
    return table, unresolved


def propagate(index: SymbolIndex, table: MarkingTable, new_sigs, unresolved):
    """Resolve references of newly marked members until the table is stable."""
    queue = deque(new_sigs)
    retained_done: set[str] = set()

    def retain_type(fqn: str, source, why):
        entry = index.get(fqn)
        if entry is None or entry.origin != "source":
            return
        table.mark_type(fqn, source, why)
        if fqn in retained_done:
            return
        retained_done.add(fqn)
        unit = entry.unit
        decl = entry.decl
        # enclosing types stay as shells around retained nested types
        for outer in index.enclosing_chain(decl)[1:]:
            retain_type(index.unit_of(outer).fqn(outer), fqn, "encloses retained type")
        for ref in extract_type_header_references(unit, decl):
            handle(ref, fqn)
        if decl.kind == "enum":
            for m in decl.members:
                if m.kind == "enum_constant":
                    if table.mark_member(m.signature, KEEP, fqn, "enum constant"):
                        queue.append(m.signature)

    def handle(ref: Reference, source_sig: str):
        res = resolve(index, ref)
        if res.kind == "internal_member":
            if table.mark_member(res.member, KEEP, source_sig, ref.describe()):
                queue.append(res.member)
            retain_type(res.fqn, source_sig, ref.describe())
        elif res.kind == "internal_type":
            retain_type(res.fqn, source_sig, ref.describe())
        elif res.kind == "unresolved" and not ref.soft:
            unresolved.append(ref)

    while queue:
        sig = queue.popleft()
        hit = index.member_owner(sig)
        if hit is None:
            continue
        owner_fqn, member = hit
        entry = index.get(owner_fqn)
        retain_type(owner_fqn, sig, "owns marked member")
        marking = table.members.get(sig, KEEP)
        for ref in extract_references(index, entry.unit, entry.decl, member, marking):
            handle(ref, sig)
    # marking members may have retained new types late; nothing else to do:
    # retain_type processed headers eagerly.

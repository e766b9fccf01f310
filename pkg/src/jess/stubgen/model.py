"""Inference records for stub synthesis."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from jess.symbols.model import Reference

# ambiguity kinds
UNUSED_RETURN = "unused_return"
LITERAL_ARGUMENT = "literal_argument"
STATIC_UNCLEAR = "static_unclear"
GENERIC_PARAMETER = "generic_parameter"
INTERFACE_VS_CLASS = "interface_vs_class"
NO_EXPLICIT_TYPE = "no_explicit_type"
FQN_UNKNOWN = "fqn_unknown"

FLAG_KINDS = (
    UNUSED_RETURN,
    LITERAL_ARGUMENT,
    STATIC_UNCLEAR,
    GENERIC_PARAMETER,
    INTERFACE_VS_CLASS,
    NO_EXPLICIT_TYPE,
    FQN_UNKNOWN,
)


@dataclass(frozen=True)
class AmbiguityFlag:
    file: str
    line: int
    kind: str
    detail: str = ""

    def to_record(self) -> dict:
        return {"file": self.file, "line": self.line, "kind": self.kind,
                "detail": self.detail}


@dataclass
class InferredType:
    """A type decision for one stub position.

    kind 'known' comes from a rule with a certain answer; 'candidate' is a
    default among possibilities.  unknown_eligible marks positions where the
    special Unknown type may be substituted without breaking compilation."""

    name: str  # qualified emission name, [] suffixes allowed
    kind: str = "known"  # known|candidate
    origin: str = ""
    unknown_eligible: bool = False
    flags: tuple[AmbiguityFlag, ...] = ()

    @property
    def rank(self) -> int:
        if self.kind == "known":
            return 2
        return 0 if self.unknown_eligible else 1


@dataclass
class UsageContext:
    """One surviving unresolved reference with its inferred owner."""

    ref: Reference
    owner_package: str  # '' for the default package
    owner_simple: str
    member_kind: Optional[str] = None  # method|field|constructor|None
    member_name: Optional[str] = None
    package_flag: Optional[AmbiguityFlag] = None

    @property
    def owner_fqn(self) -> str:
        if self.owner_package:
            return f"{self.owner_package}.{self.owner_simple}"
        return self.owner_simple

    @property
    def order_key(self):
        return (self.ref.unit.file, self.ref.site_tok)


@dataclass
class MemberFacts:
    """Accumulated per-position facts for one stub member."""

    kind: str  # method|field|constructor
    name: str
    arity: int = 0
    value: Optional[InferredType] = None  # return/field type
    params: list[Optional[InferredType]] = field(default_factory=list)
    static_votes: list[tuple[bool, bool]] = field(default_factory=list)  # (static, certain)
    first_use: tuple = ()
    static_flag_site: Optional[AmbiguityFlag] = None
    generic_positions: dict = field(default_factory=dict)  # pos -> type param name

    def merge_value(self, new: InferredType, order_key):
        self.value = _merge(self.value, new)

    def merge_param(self, i: int, new: InferredType):
        while len(self.params) <= i:
            self.params.append(None)
        self.params[i] = _merge(self.params[i], new)


def _merge(old: Optional[InferredType], new: Optional[InferredType]):
    if new is None:
        return old
    if old is None:
        return new
    # Known beats Candidate beats Unknown-eligible; first use wins ties.
    return new if new.rank > old.rank else old

"""Symbol index over source plus classpath, and mark-and-sweep resolution."""

from jess.symbols.index import (
    ClasspathEntryUnreadable,
    IndexedType,
    SymbolIndex,
    build_index,
)
from jess.symbols.marking import (
    KEEP,
    KEEP_ALL,
    MarkingTable,
    TargetNotFound,
    mark_and_sweep,
    propagate,
)
from jess.symbols.model import Reference, Resolution
from jess.symbols.references import extract_references
from jess.symbols.resolve import resolve

__all__ = [
    "ClasspathEntryUnreadable",
    "IndexedType",
    "KEEP",
    "KEEP_ALL",
    "MarkingTable",
    "Reference",
    "Resolution",
    "SymbolIndex",
    "TargetNotFound",
    "build_index",
    "extract_references",
    "mark_and_sweep",
    "propagate",
    "resolve",
]

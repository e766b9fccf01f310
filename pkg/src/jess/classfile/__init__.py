"""JVM class-file parsing, normalized disassembly, and bytecode comparison."""

from jess.classfile.disasm import NormalizedDisassembly, disassemble
from jess.classfile.distance import (
    MethodComparison,
    compare_methods,
    levenshtein,
    nld,
)
from jess.classfile.model import (
    ArchiveUnreadable,
    ClassModel,
    MalformedClassFile,
    MethodNotFound,
    UnsupportedMajorVersion,
)
from jess.classfile.parse import (
    descriptor_param_count,
    descriptor_to_names,
    parse_class,
    read_archive,
)

__all__ = [
    "ArchiveUnreadable",
    "ClassModel",
    "MalformedClassFile",
    "MethodComparison",
    "MethodNotFound",
    "NormalizedDisassembly",
    "UnsupportedMajorVersion",
    "compare_methods",
    "descriptor_param_count",
    "descriptor_to_names",
    "disassemble",
    "levenshtein",
    "nld",
    "parse_class",
    "read_archive",
]

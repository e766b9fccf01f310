"""Usage-context collection and type inference for stub synthesis.

Inference order for an expression: literal typing, then definition-site
lookup (innermost block outward, parameters, then fields of the class,
outer classes and source superclasses), then the statement context
(conditions force boolean, return statements force the declared return
type).  What remains is a flagged default."""

from __future__ import annotations

from typing import Optional

from jess.stubgen.model import (
    AmbiguityFlag,
    FQN_UNKNOWN,
    InferredType,
    LITERAL_ARGUMENT,
    NO_EXPLICIT_TYPE,
    STATIC_UNCLEAR,
    UNUSED_RETURN,
    UsageContext,
)
from jess.symbols.index import SymbolIndex
from jess.symbols.marking import MarkingTable
from jess.symbols.model import Reference
from jess.symbols.resolve import (
    ExprTyper,
    发现 := None,  # placeholder removed below
)

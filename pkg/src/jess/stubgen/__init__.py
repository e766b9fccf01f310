"""Stub inference and synthesis for references the code base cannot resolve."""

from jess.stubgen.infer import (
    UsageContext,
    collect_unresolved,
    infer_expression_type,
    infer_fqn,
)
from jess.stubgen.emit import StubFile, SynthesisResult, synthesize_stubs

__all__ = [
    "StubFile",
    "SynthesisResult",
    "UsageContext",
    "collect_unresolved",
    "infer_expression_type",
    "infer_fqn",
    "synthesize_stubs",
]

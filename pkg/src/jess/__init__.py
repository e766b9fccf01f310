"""Targeted compilation of changed Java members.

Slices a partial code base down to what a set of target members needs,
synthesizes stubs for unresolvable references, drives an external Java
compiler, and verifies results against reference bytecode."""

__version__ = "0.1.0"

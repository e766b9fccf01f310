"""Levenshtein distance, its normalized form, and method-level comparison."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from jess.classfile.disasm import disassemble_member
from jess.classfile.model import ClassModel, MemberInfo
from jess.classfile.parse import parse_class


def levenshtein(a: str, b: str) -> int:
    """Unit-cost edit distance (insert, delete, substitute) over characters."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    if len(b) < len(a):
        a, b = b, a
    prev = list(range(len(a) + 1))
    cur = [0] * (len(a) + 1)
    for j, cb in enumerate(b, start=1):
        cur[0] = j
        for i, ca in enumerate(a, start=1):
            cost = 0 if ca == cb else 1
            cur[i] = min(prev[i] + 1, cur[i - 1] + 1, prev[i - 1] + cost)
        prev, cur = cur, prev
    return prev[len(a)]


def nld(a: str, b: str) -> float:
    """levenshtein / max(|a|, |b|); 0.0 for two empty texts."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 0.0
    return levenshtein(a, b) / longest


@dataclass
class MethodComparison:
    left_key: str
    right_key: str
    equal: bool
    levenshtein: int
    nld: float
    left_len: int
    right_len: int
    synthetic: bool = False  # companion method pair, not the requested key

    def to_record(self, class_name: str) -> dict:
        name, desc = (
            self.left_key.split("(", 1) if "(" in self.left_key else (self.left_key, "")
        )
        return {
            "class": class_name,
            "method": name,
            "descriptor": "(" + desc if desc else "",
            "equal": self.equal,
            "lev": self.levenshtein,
            "nld": self.nld,
            "left_len": self.left_len,
            "right_len": self.right_len,
        }


def compare_texts(left: str, right: str, wildcard_unknown: bool = False):
    if wildcard_unknown:
        left, right = _wildcard_align(left, right)
    dist = levenshtein(left, right)
    longest = max(len(left), len(right))
    return dist, (dist / longest if longest else 0.0), len(left), len(right)


def split_method_key(key: str) -> tuple[str, Optional[str]]:
    """`name(desc)` or bare `name`; the descriptor starts at the first '('."""
    if "(" in key:
        i = key.index("(")
        return key[:i], key[i:]
    return key, None


def compare_methods(
    left_bytes: bytes,
    right_bytes: bytes,
    key: str,
    wildcard_unknown: bool = False,
) -> tuple[list[MethodComparison], list[str]]:
    """Compare one method (plus derived synthetic companions) across two
    class files.  Returns (comparisons, notes); a missing method on either
    side is reported in notes rather than raised."""
    left = parse_class(left_bytes)
    right = parse_class(right_bytes)
    name, desc = split_method_key(key)
    notes: list[str] = []
    comparisons: list[MethodComparison] = []

    lm = left.find_method(name, desc)
    rm = right.find_method(name, desc)
    if not lm:
        notes.append(f"MethodNotFound(left): {key}")
    if not rm:
        notes.append(f"MethodNotFound(right): {key}")
    if lm and rm:
        comparisons.append(_compare_pair(left, lm[0], right, rm[0], wildcard_unknown))

    for l_comp, r_comp in _pair_companions(left, right, name):
        if l_comp is None:
            notes.append(f"companion only on right: {r_comp.key}")
            continue
        if r_comp is None:
            notes.append(f"companion only on left: {l_comp.key}")
            continue
        cmp = _compare_pair(left, l_comp, right, r_comp, wildcard_unknown)
        cmp.synthetic = True
        comparisons.append(cmp)
    return comparisons, notes


def _compare_pair(
    left_model: ClassModel,
    left_m: MemberInfo,
    right_model: ClassModel,
    right_m: MemberInfo,
    wildcard: bool,
) -> MethodComparison:
    lt = disassemble_member(left_model, left_m).text
    rt = disassemble_member(right_model, right_m).text
    dist, ratio, llen, rlen = compare_texts(lt, rt, wildcard)
    return MethodComparison(
        left_key=left_m.key,
        right_key=right_m.key,
        equal=dist == 0,
        levenshtein=dist,
        nld=ratio,
        left_len=llen,
        right_len=rlen,
    )


def _companions(model: ClassModel, name: str) -> list[tuple[int, MemberInfo]]:
    """Synthetic/lambda companions whose names derive from `name`, with their
    numeric suffix: lambda$name$0, name$1, ..."""
    pattern = re.compile(rf"^(?:lambda\$)?{re.escape(name)}\$(\d+)$")
    out = []
    for m in model.methods:
        hit = pattern.match(m.name)
        if hit:
            out.append((int(hit.group(1)), m))
    out.sort(key=lambda pair: pair[0])
    return out


def _pair_companions(left: ClassModel, right: ClassModel, name: str):
    ls = _companions(left, name)
    rs = _companions(right, name)
    for i in range(max(len(ls), len(rs))):
        yield (
            ls[i][1] if i < len(ls) else None,
            rs[i][1] if i < len(rs) else None,
        )


# --- unknown-package wildcard matching --------------------------------------
#
# Stub types whose package could not be inferred land in the special
# `unknown` package and ambiguous type positions may use the `Unknown` type.
# Under --wildcard-unknown, operand tokens rooted there match any token in
# the same position.

_UNKNOWN_BITS = re.compile(r"Lunknown/[^;]*;|\bunknown/[\w$/.]+|\bUnknown\b")


def _wildcard_pattern(token: str) -> Optional[re.Pattern]:
    if not _UNKNOWN_BITS.search(token):
        return None
    out = []
    pos = 0
    for m in _UNKNOWN_BITS.finditer(token):
        out.append(re.escape(token[pos : m.start()]))
        bit = m.group(0)
        if bit.startswith("L"):
            out.append(r"L[^;]+;")
        elif bit.startswith("unknown/"):
            out.append(r"[\w$/.]+")
        else:  # bare Unknown
            out.append(r"[\w$.]+")
        pos = m.end()
    out.append(re.escape(token[pos:]))
    return re.compile("".join(out))


def _wildcard_align(left: str, right: str) -> tuple[str, str]:
    l_lines = left.split("\n")
    r_lines = right.split("\n")
    for i in range(min(len(l_lines), len(r_lines))):
        lt = l_lines[i].split(" ")
        rt = r_lines[i].split(" ")
        if len(lt) != len(rt):
            continue
        for j in range(len(lt)):
            if lt[j] == rt[j]:
                continue
            lp = _wildcard_pattern(lt[j])
            if lp is not None and lp.fullmatch(rt[j]):
                lt[j] = rt[j]
                continue
            rp = _wildcard_pattern(rt[j])
            if rp is not None and rp.fullmatch(lt[j]):
                rt[j] = lt[j]
        l_lines[i] = " ".join(lt)
        r_lines[i] = " ".join(rt)
    return "\n".join(l_lines), "\n".join(r_lines)

"""Normalized per-method disassembly.

One instruction per line with symbolically resolved operands.  Branch
targets are renumbered densely as L0, L1, ... in first-appearance order so
output is independent of absolute bytecode offsets.  LineNumberTable,
LocalVariableTable(+Types), SourceFile and StackMapTable never contribute;
wide prefixes and ldc_w/goto_w/jsr_w width variants collapse to their
narrow mnemonics."""

from __future__ import annotations

import struct
from dataclasses import dataclass

from jess.classfile.model import (
    CONSTANT_Class,
    CONSTANT_Double,
    CONSTANT_Dynamic,
    CONSTANT_Float,
    CONSTANT_Integer,
    CONSTANT_InvokeDynamic,
    CONSTANT_Long,
    CONSTANT_MethodHandle,
    CONSTANT_MethodType,
    CONSTANT_String,
    ClassModel,
    MalformedClassFile,
    MemberInfo,
    MethodNotFound,
    REF_KIND_NAMES,
    method_flag_words,
)

# operand kinds
_N = ""  # none
_S1, _S2 = "s1", "s2"
_IDX1 = "idx1"  # local variable index (wide-able)
_CP1, _CP2 = "cp1", "cp2"
_BR2, _BR4 = "br2", "br4"

_SIMPLE = {
    0x00: "nop", 0x01: "aconst_null", 0x02: "iconst_m1", 0x03: "iconst_0",
    0x04: "iconst_1", 0x05: "iconst_2", 0x06: "iconst_3", 0x07: "iconst_4",
    0x08: "iconst_5", 0x09: "lconst_0", 0x0A: "lconst_1", 0x0B: "fconst_0",
    0x0C: "fconst_1", 0x0D: "fconst_2", 0x0E: "dconst_0", 0x0F: "dconst_1",
    0x2E: "iaload", 0x2F: "laload", 0x30: "faload", 0x31: "daload",
    0x32: "aaload", 0x33: "baload", 0x34: "caload", 0x35: "saload",
    0x4F: "iastore", 0x50: "lastore", 0x51: "fastore", 0x52: "dastore",
    0x53: "aastore", 0x54: "bastore", 0x55: "castore", 0x56: "sastore",
    0x57: "pop", 0x58: "pop2", 0x59: "dup", 0x5A: "dup_x1", 0x5B: "dup_x2",
    0x5C: "dup2", 0x5D: "dup2_x1", 0x5E: "dup2_x2", 0x5F: "swap",
    0x60: "iadd", 0x61: "ladd", 0x62: "fadd", 0x63: "dadd",
    0x64: "isub", 0x65: "lsub", 0x66: "fsub", 0x67: "dsub",
    0x68: "imul", 0x69: "lmul", 0x6A: "fmul", 0x6B: "dmul",
    0x6C: "idiv", 0x6D: "ldiv", 0x6E: "fdiv", 0x6F: "ddiv",
    0x70: "irem", 0x71: "lrem", 0x72: "frem", 0x73: "drem",
    0x74: "ineg", 0x75: "lneg", 0x76: "fneg", 0x77: "dneg",
    0x78: "ishl", 0x79: "lshl", 0x7A: "ishr", 0x7B: "lshr",
    0x7C: "iushr", 0x7D: "lushr", 0x7E: "iand", 0x7F: "land",
    0x80: "ior", 0x81: "lor", 0x82: "ixor", 0x83: "lxor",
    0x85: "i2l", 0x86: "i2f", 0x87: "i2d", 0x88: "l2i", 0x89: "l2f",
    0x8A: "l2d", 0x8B: "f2i", 0x8C: "f2l", 0x8D: "f2d", 0x8E: "d2i",
    0x8F: "d2l", 0x90: "d2f", 0x91: "i2b", 0x92: "i2c", 0x93: "i2s",
    0x94: "lcmp", 0x95: "fcmpl", 0x96: "fcmpg", 0x97: "dcmpl", 0x98: "dcmpg",
    0xAC: "ireturn", 0xAD: "lreturn", 0xAE: "freturn", 0xAF: "dreturn",
    0xB0: "areturn", 0xB1: "return", 0xBE: "arraylength", 0xBF: "athrow",
    0xC2: "monitorenter", 0xC3: "monitorexit",
}

_OPS: dict[int, tuple[str, str]] = {}
for op, name in _SIMPLE.items():
    _OPS[op] = (name, _N)
for base, stem in ((0x1A, "iload"), (0x1E, "lload"), (0x22, "fload"),
                   (0x26, "dload"), (0x2A, "aload")):
    for k in range(4):
        _OPS[base + k] = (f"{stem}_{k}", _N)
for base, stem in ((0x3B, "istore"), (0x3F, "lstore"), (0x43, "fstore"),
                   (0x47, "dstore"), (0x4B, "astore")):
    for k in range(4):
        _OPS[base + k] = (f"{stem}_{k}", _N)
_OPS.update({
    0x10: ("bipush", _S1),
    0x11: ("sipush", _S2),
    0x12: ("ldc", _CP1),
    0x13: ("ldc", _CP2),  # ldc_w collapses
    0x14: ("ldc2_w", _CP2),
    0x15: ("iload", _IDX1), 0x16: ("lload", _IDX1), 0x17: ("fload", _IDX1),
    0x18: ("dload", _IDX1), 0x19: ("aload", _IDX1),
    0x36: ("istore", _IDX1), 0x37: ("lstore", _IDX1), 0x38: ("fstore", _IDX1),
    0x39: ("dstore", _IDX1), 0x3A: ("astore", _IDX1),
    0x84: ("iinc", "iinc"),
    0x99: ("ifeq", _BR2), 0x9A: ("ifne", _BR2), 0x9B: ("iflt", _BR2),
    0x9C: ("ifge", _BR2), 0x9D: ("ifgt", _BR2), 0x9E: ("ifle", _BR2),
    0x9F: ("if_icmpeq", _BR2), 0xA0: ("if_icmpne", _BR2),
    0xA1: ("if_icmplt", _BR2), 0xA2: ("if_icmpge", _BR2),
    0xA3: ("if_icmpgt", _BR2), 0xA4: ("if_icmple", _BR2),
    0xA5: ("if_acmpeq", _BR2), 0xA6: ("if_acmpne", _BR2),
    0xA7: ("goto", _BR2), 0xA8: ("jsr", _BR2), 0xA9: ("ret", _IDX1),
    0xAA: ("tableswitch", "tableswitch"),
    0xAB: ("lookupswitch", "lookupswitch"),
    0xB2: ("getstatic", _CP2), 0xB3: ("putstatic", _CP2),
    0xB4: ("getfield", _CP2), 0xB5: ("putfield", _CP2),
    0xB6: ("invokevirtual", _CP2), 0xB7: ("invokespecial", _CP2),
    0xB8: ("invokestatic", _CP2),
    0xB9: ("invokeinterface", "invokeinterface"),
    0xBA: ("invokedynamic", "invokedynamic"),
    0xBB: ("new", _CP2), 0xBC: ("newarray", "newarray"),
    0xBD: ("anewarray", _CP2),
    0xC0: ("checkcast", _CP2), 0xC1: ("instanceof", _CP2),
    0xC5: ("multianewarray", "multianewarray"),
    0xC6: ("ifnull", _BR2), 0xC7: ("ifnonnull", _BR2),
    0xC8: ("goto", _BR4), 0xC9: ("jsr", _BR4),  # wide branches collapse
})

_NEWARRAY_TYPES = {
    4: "boolean", 5: "char", 6: "float", 7: "double",
    8: "byte", 9: "short", 10: "int", 11: "long",
}


@dataclass
class _Insn:
    offset: int
    mnemonic: str
    kind: str
    operands: tuple


@dataclass
class NormalizedDisassembly:
    method_key: str  # name + descriptor
    lines: list[str]

    @property
    def text(self) -> str:
        return "\n".join(self.lines)

    def __len__(self):
        return len(self.text)


def disassemble(model: ClassModel, name: str, descriptor: str | None = None) -> NormalizedDisassembly:
    """Normalized text for one method; header-only for abstract/native."""
    matches = model.find_method(name, descriptor)
    if not matches:
        raise MethodNotFound(name + (descriptor or ""), model.this_class)
    if len(matches) > 1:
        raise MethodNotFound(
            name + (descriptor or ""),
            f"{model.this_class} (ambiguous: {len(matches)} overloads, pass a descriptor)",
        )
    return disassemble_member(model, matches[0])


def disassemble_member(model: ClassModel, method: MemberInfo) -> NormalizedDisassembly:
    header = " ".join(method_flag_words(method.access_flags) + [method.key])
    lines = [header]
    for exc in method.exceptions:
        lines.append(f"throws {exc}")
    if method.code is None:
        return NormalizedDisassembly(method.key, lines)

    insns = _decode(method.code.code)
    labels = _assign_labels(insns, method.code.exception_table)
    for insn in insns:
        if insn.offset in labels:
            lines.append(f"{labels[insn.offset]}:")
        lines.append(_render(model, insn, labels))
    end_off = len(method.code.code)
    if end_off in labels:
        lines.append(f"{labels[end_off]}:")
    for entry in method.code.exception_table:
        catch = (
            model.class_name(entry.catch_type) if entry.catch_type else "any"
        )
        lines.append(
            f".catch {labels[entry.start_pc]} {labels[entry.end_pc]} "
            f"{labels[entry.handler_pc]} {catch}"
        )
    return NormalizedDisassembly(method.key, lines)


def _decode(code: bytes) -> list[_Insn]:
    insns = []
    i = 0
    n = len(code)
    while i < n:
        start = i
        op = code[i]
        i += 1
        wide = False
        if op == 0xC4:  # wide prefix
            wide = True
            if i >= n:
                raise MalformedClassFile(start, "truncated wide instruction")
            op = code[i]
            i += 1
        if op not in _OPS:
            raise MalformedClassFile(start, f"unknown opcode 0x{op:02X}")
        mnem, kind = _OPS[op]

        def u1():
            nonlocal i
            v = code[i]
            i += 1
            return v

        def u2():
            nonlocal i
            v = struct.unpack_from(">H", code, i)[0]
            i += 2
            return v

        def s2():
            nonlocal i
            v = struct.unpack_from(">h", code, i)[0]
            i += 2
            return v

        def s4():
            nonlocal i
            v = struct.unpack_from(">i", code, i)[0]
            i += 4
            return v

        try:
            if kind == _N:
                operands = ()
            elif kind == _S1:
                operands = (struct.unpack_from(">b", code, i)[0],)
                i += 1
            elif kind == _S2:
                operands = (s2(),)
            elif kind == _IDX1:
                operands = (u2() if wide else u1(),)
            elif kind == _CP1:
                operands = (u1(),)
            elif kind == _CP2:
                operands = (u2(),)
            elif kind == _BR2:
                operands = (start + s2(),)
            elif kind == _BR4:
                operands = (start + s4(),)
            elif kind == "iinc":
                if wide:
                    operands = (u2(), s2())
                else:
                    operands = (u1(), struct.unpack_from(">b", code, i)[0])
                    i += 1
            elif kind == "invokeinterface":
                operands = (u2(),)
                u1()
                u1()
            elif kind == "invokedynamic":
                operands = (u2(),)
                u2()
            elif kind == "newarray":
                operands = (u1(),)
            elif kind == "multianewarray":
                operands = (u2(), u1())
            elif kind in ("tableswitch", "lookupswitch"):
                while i % 4 != 0:
                    i += 1
                default = start + s4()
                if kind == "tableswitch":
                    low, high = s4(), s4()
                    targets = [(low + k, start + s4()) for k in range(high - low + 1)]
                else:
                    npairs = s4()
                    targets = []
                    for _ in range(npairs):
                        match = s4()
                        targets.append((match, start + s4()))
                operands = (default, tuple(targets))
            else:  # pragma: no cover
                raise AssertionError(kind)
        except struct.error:
            raise MalformedClassFile(start, "truncated instruction operands") from None
        insns.append(_Insn(start, mnem, kind, operands))
    return insns


def _assign_labels(insns, exception_table) -> dict[int, str]:
    labels: dict[int, str] = {}

    def touch(offset):
        if offset not in labels:
            labels[offset] = f"L{len(labels)}"

    for insn in insns:
        if insn.kind in (_BR2, _BR4):
            touch(insn.operands[0])
        elif insn.kind in ("tableswitch", "lookupswitch"):
            touch(insn.operands[0])
            for _, target in insn.operands[1]:
                touch(target)
    for entry in exception_table:
        touch(entry.start_pc)
        touch(entry.end_pc)
        touch(entry.handler_pc)
    return labels


def _render(model: ClassModel, insn: _Insn, labels) -> str:
    kind = insn.kind
    m = insn.mnemonic
    if kind == _N:
        return m
    if kind in (_S1, _S2, _IDX1):
        return f"{m} {insn.operands[0]}"
    if kind in (_CP1, _CP2):
        if m in ("ldc", "ldc2_w"):
            return f"{m} {_constant_text(model, insn.operands[0])}"
        if m in ("new", "anewarray", "checkcast", "instanceof"):
            return f"{m} {model.class_name(insn.operands[0])}"
        owner, name, desc = model.member_ref(insn.operands[0])
        return f"{m} {owner}.{name}:{desc}"
    if kind in (_BR2, _BR4):
        return f"{m} {labels[insn.operands[0]]}"
    if kind == "iinc":
        return f"iinc {insn.operands[0]} {insn.operands[1]}"
    if kind == "invokeinterface":
        owner, name, desc = model.member_ref(insn.operands[0])
        return f"invokeinterface {owner}.{name}:{desc}"
    if kind == "invokedynamic":
        return f"invokedynamic {_indy_text(model, insn.operands[0])}"
    if kind == "newarray":
        return f"newarray {_NEWARRAY_TYPES.get(insn.operands[0], insn.operands[0])}"
    if kind == "multianewarray":
        return f"multianewarray {model.class_name(insn.operands[0])} {insn.operands[1]}"
    if kind in ("tableswitch", "lookupswitch"):
        default, targets = insn.operands
        parts = [f"{m}"]
        for match, target in targets:
            parts.append(f"  {match}: {labels[target]}")
        parts.append(f"  default: {labels[default]}")
        return "\n".join(parts)
    raise AssertionError(kind)  # pragma: no cover


def _constant_text(model: ClassModel, index: int) -> str:
    tag = model.entry(index)[0]
    value = model.entry(index)[1]
    if tag == CONSTANT_Integer:
        return str(value)
    if tag == CONSTANT_Long:
        return f"{value}L"
    if tag == CONSTANT_Float:
        return f"{value!r}f"
    if tag == CONSTANT_Double:
        return f"{value!r}d"
    if tag == CONSTANT_String:
        text = model.utf8(value)
        return '"' + text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'
    if tag == CONSTANT_Class:
        return f"class {model.utf8(value)}"
    if tag == CONSTANT_MethodType:
        return f"methodtype {model.utf8(value)}"
    if tag == CONSTANT_MethodHandle:
        return f"methodhandle {_handle_text(model, index)}"
    if tag == CONSTANT_Dynamic:
        name, desc = model.name_and_type(model.entry(index)[2])
        return f"dynamic {name}:{desc} {_bsm_text(model, model.entry(index)[1])}"
    raise MalformedClassFile(0, f"constant pool index {index} not loadable")


def _handle_text(model: ClassModel, index: int) -> str:
    _, ref_kind, ref_i = model.entry(index, CONSTANT_MethodHandle)
    owner, name, desc = model.member_ref(ref_i)
    return f"{REF_KIND_NAMES.get(ref_kind, ref_kind)} {owner}.{name}:{desc}"


def _bsm_text(model: ClassModel, bsm_index: int) -> str:
    if bsm_index >= len(model.bootstrap_methods):
        return f"bsm#{bsm_index}"
    bsm = model.bootstrap_methods[bsm_index]
    args = ", ".join(_constant_text(model, a) for a in bsm.arguments)
    return f"bsm={_handle_text(model, bsm.method_ref)} args=[{args}]"


def _indy_text(model: ClassModel, index: int) -> str:
    _, bsm_i, nat_i = model.entry(index, CONSTANT_InvokeDynamic)
    name, desc = model.name_and_type(nat_i)
    return f"{name}:{desc} {_bsm_text(model, bsm_i)}"

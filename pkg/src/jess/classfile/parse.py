"""Binary class-file and archive reading.

Big-endian throughout, per the JVM class-file format.  Unknown attributes
are retained opaquely by name.  A validation pass checks that every pool
index referenced by parsed structures is in range and of the expected tag."""

from __future__ import annotations

import struct
import zipfile
from pathlib import Path

from jess.classfile.model import (
    CONSTANT_Class,
    CONSTANT_Double,
    CONSTANT_Dynamic,
    CONSTANT_Fieldref,
    CONSTANT_Float,
    CONSTANT_Integer,
    CONSTANT_InterfaceMethodref,
    CONSTANT_InvokeDynamic,
    CONSTANT_Long,
    CONSTANT_MethodHandle,
    CONSTANT_MethodType,
    CONSTANT_Methodref,
    CONSTANT_Module,
    CONSTANT_NameAndType,
    CONSTANT_Package,
    CONSTANT_String,
    CONSTANT_Utf8,
    ArchiveUnreadable,
    BootstrapMethod,
    ClassModel,
    CodeAttr,
    ExceptionEntry,
    MalformedClassFile,
    MemberInfo,
    UnsupportedMajorVersion,
)

MIN_MAJOR = 45
MAX_MAJOR = 65


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def need(self, n: int):
        if self.pos + n > len(self.data):
            raise MalformedClassFile(self.pos, "truncated stream")

    def u1(self) -> int:
        self.need(1)
        v = self.data[self.pos]
        self.pos += 1
        return v

    def u2(self) -> int:
        self.need(2)
        v = struct.unpack_from(">H", self.data, self.pos)[0]
        self.pos += 2
        return v

    def u4(self) -> int:
        self.need(4)
        v = struct.unpack_from(">I", self.data, self.pos)[0]
        self.pos += 4
        return v

    def raw(self, n: int) -> bytes:
        self.need(n)
        v = self.data[self.pos : self.pos + n]
        self.pos += n
        return v


def parse_class(data: bytes) -> ClassModel:
    r = _Reader(data)
    magic = r.u4()
    if magic != 0xCAFEBABE:
        raise MalformedClassFile(0, f"bad magic 0x{magic:08X}")
    minor = r.u2()
    major = r.u2()
    if major > MAX_MAJOR:
        raise UnsupportedMajorVersion(major)
    if major < MIN_MAJOR:
        raise MalformedClassFile(6, f"impossible major version {major}")

    pool = _read_pool(r)
    model_tmp = ClassModel(
        minor_version=minor,
        major_version=major,
        pool=pool,
        access_flags=0,
        this_class="",
        super_class=None,
        interfaces=[],
        fields=[],
        methods=[],
        attributes=[],
    )
    _validate_pool(pool)

    access = r.u2()
    this_i = r.u2()
    super_i = r.u2()
    model_tmp.access_flags = access
    model_tmp.this_class = model_tmp.class_name(this_i)
    model_tmp.super_class = model_tmp.class_name(super_i) if super_i else None
    for _ in range(r.u2()):
        model_tmp.interfaces.append(model_tmp.class_name(r.u2()))

    for _ in range(r.u2()):
        model_tmp.fields.append(_read_member(r, model_tmp))
    for _ in range(r.u2()):
        model_tmp.methods.append(_read_member(r, model_tmp))
    model_tmp.attributes = _read_attributes(r, model_tmp)
    if r.pos != len(data):
        raise MalformedClassFile(r.pos, "trailing bytes after class structure")

    for name, payload in model_tmp.attributes:
        if name == "BootstrapMethods":
            model_tmp.bootstrap_methods = _read_bootstrap(payload, r.pos)
    return model_tmp


def _read_pool(r: _Reader) -> list:
    count = r.u2()
    pool: list = [None] * max(count, 1)
    i = 1
    while i < count:
        at = r.pos
        tag = r.u1()
        if tag == CONSTANT_Utf8:
            length = r.u2()
            raw = r.raw(length)
            try:
                # CESU-8-ish: plain utf-8 covers everything javac emits for
                # ordinary sources; fall back to surrogatepass for the rest
                text = raw.decode("utf-8")
            except UnicodeDecodeError:
                text = raw.decode("utf-8", errors="replace")
            pool[i] = (tag, text)
        elif tag == CONSTANT_Integer:
            pool[i] = (tag, struct.unpack(">i", r.raw(4))[0])
        elif tag == CONSTANT_Float:
            pool[i] = (tag, struct.unpack(">f", r.raw(4))[0])
        elif tag == CONSTANT_Long:
            pool[i] = (tag, struct.unpack(">q", r.raw(8))[0])
        elif tag == CONSTANT_Double:
            pool[i] = (tag, struct.unpack(">d", r.raw(8))[0])
        elif tag in (CONSTANT_Class, CONSTANT_String, CONSTANT_MethodType,
                     CONSTANT_Module, CONSTANT_Package):
            pool[i] = (tag, r.u2())
        elif tag in (CONSTANT_Fieldref, CONSTANT_Methodref,
                     CONSTANT_InterfaceMethodref, CONSTANT_NameAndType,
                     CONSTANT_Dynamic, CONSTANT_InvokeDynamic):
            pool[i] = (tag, r.u2(), r.u2())
        elif tag == CONSTANT_MethodHandle:
            pool[i] = (tag, r.u1(), r.u2())
        else:
            raise MalformedClassFile(at, f"unknown constant pool tag {tag}")
        if tag in (CONSTANT_Long, CONSTANT_Double):
            i += 2
        else:
            i += 1
    return pool


def _validate_pool(pool: list):
    def check(idx, tags, what):
        if idx < 1 or idx >= len(pool) or pool[idx] is None:
            raise MalformedClassFile(0, f"{what}: pool index {idx} out of range")
        if pool[idx][0] not in tags:
            raise MalformedClassFile(0, f"{what}: pool index {idx} has wrong tag")

    member_tags = (CONSTANT_Fieldref, CONSTANT_Methodref, CONSTANT_InterfaceMethodref)
    for i, ent in enumerate(pool):
        if ent is None:
            continue
        tag = ent[0]
        if tag in (CONSTANT_Class, CONSTANT_String, CONSTANT_MethodType,
                   CONSTANT_Module, CONSTANT_Package):
            check(ent[1], (CONSTANT_Utf8,), f"entry {i}")
        elif tag in member_tags:
            check(ent[1], (CONSTANT_Class,), f"entry {i}")
            check(ent[2], (CONSTANT_NameAndType,), f"entry {i}")
        elif tag == CONSTANT_NameAndType:
            check(ent[1], (CONSTANT_Utf8,), f"entry {i}")
            check(ent[2], (CONSTANT_Utf8,), f"entry {i}")
        elif tag == CONSTANT_MethodHandle:
            kind = ent[1]
            if kind in (1, 2, 3, 4):
                check(ent[2], (CONSTANT_Fieldref,), f"entry {i}")
            elif kind in (5, 6, 7, 8):
                check(ent[2], (CONSTANT_Methodref, CONSTANT_InterfaceMethodref), f"entry {i}")
            elif kind == 9:
                check(ent[2], (CONSTANT_InterfaceMethodref, CONSTANT_Methodref), f"entry {i}")
            else:
                raise MalformedClassFile(0, f"entry {i}: bad method handle kind {kind}")
        elif tag in (CONSTANT_Dynamic, CONSTANT_InvokeDynamic):
            check(ent[2], (CONSTANT_NameAndType,), f"entry {i}")


def _read_member(r: _Reader, model: ClassModel) -> MemberInfo:
    flags = r.u2()
    name = model.utf8(r.u2())
    desc = model.utf8(r.u2())
    member = MemberInfo(access_flags=flags, name=name, descriptor=desc, attributes=[])
    member.attributes = _read_attributes(r, model)
    for attr_name, payload in member.attributes:
        if attr_name == "Code":
            member.code = _read_code(payload, model)
        elif attr_name == "Exceptions":
            sub = _Reader(payload)
            member.exceptions = [model.class_name(sub.u2()) for _ in range(sub.u2())]
    return member


def _read_attributes(r: _Reader, model: ClassModel) -> list[tuple[str, bytes]]:
    out = []
    for _ in range(r.u2()):
        name = model.utf8(r.u2())
        length = r.u4()
        out.append((name, r.raw(length)))
    return out


def _read_code(payload: bytes, model: ClassModel) -> CodeAttr:
    r = _Reader(payload)
    max_stack = r.u2()
    max_locals = r.u2()
    code_len = r.u4()
    code = r.raw(code_len)
    table = []
    for _ in range(r.u2()):
        table.append(ExceptionEntry(r.u2(), r.u2(), r.u2(), r.u2()))
    attrs = _read_attributes(r, model)
    return CodeAttr(max_stack, max_locals, code, table, attrs)


def _read_bootstrap(payload: bytes, base_offset: int) -> list[BootstrapMethod]:
    r = _Reader(payload)
    out = []
    for _ in range(r.u2()):
        ref = r.u2()
        args = [r.u2() for _ in range(r.u2())]
        out.append(BootstrapMethod(method_ref=ref, arguments=args))
    return out


def read_archive(path) -> list[tuple[str, bytes]]:
    """Every .class entry of a ZIP container, directory structure preserved."""
    try:
        with zipfile.ZipFile(path) as zf:
            return [
                (info.filename, zf.read(info.filename))
                for info in zf.infolist()
                if info.filename.endswith(".class") and not info.is_dir()
            ]
    except (zipfile.BadZipFile, OSError) as exc:
        raise ArchiveUnreadable(path, str(exc)) from None


def iter_classpath_classes(entry):
    """Yield (binary_path, bytes) for a classpath entry (directory or archive)."""
    p = Path(entry)
    if p.is_dir():
        for f in sorted(p.rglob("*.class")):
            yield str(f.relative_to(p)).replace("\\", "/"), f.read_bytes()
    elif p.is_file():
        yield from read_archive(p)
    else:
        raise ArchiveUnreadable(entry, "no such file or directory")


# --- descriptors ------------------------------------------------------------

_PRIM = {
    "B": "byte", "C": "char", "D": "double", "F": "float", "I": "int",
    "J": "long", "S": "short", "Z": "boolean", "V": "void",
}


def _one_type(desc: str, i: int) -> tuple[str, int]:
    dims = 0
    while i < len(desc) and desc[i] == "[":
        dims += 1
        i += 1
    if i >= len(desc):
        raise ValueError(f"bad descriptor {desc!r}")
    ch = desc[i]
    if ch in _PRIM:
        return _PRIM[ch] + "[]" * dims, i + 1
    if ch == "L":
        j = desc.index(";", i)
        return desc[i + 1 : j].replace("/", ".") + "[]" * dims, j + 1
    raise ValueError(f"bad descriptor {desc!r}")


def descriptor_to_names(desc: str) -> tuple[list[str], str]:
    """Split a method descriptor into (param type names, return type name)."""
    if not desc.startswith("("):
        name, _ = _one_type(desc, 0)
        return [], name
    params = []
    i = 1
    while desc[i] != ")":
        name, i = _one_type(desc, i)
        params.append(name)
    ret, _ = _one_type(desc, i + 1)
    return params, ret


def descriptor_param_count(desc: str) -> int:
    return len(descriptor_to_names(desc)[0])

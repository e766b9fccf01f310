"""Structural model of a parsed JVM class file."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

# constant pool tags
CONSTANT_Utf8 = 1
CONSTANT_Integer = 3
CONSTANT_Float = 4
CONSTANT_Long = 5
CONSTANT_Double = 6
CONSTANT_Class = 7
CONSTANT_String = 8
CONSTANT_Fieldref = 9
CONSTANT_Methodref = 10
CONSTANT_InterfaceMethodref = 11
CONSTANT_NameAndType = 12
CONSTANT_MethodHandle = 15
CONSTANT_MethodType = 16
CONSTANT_Dynamic = 17
CONSTANT_InvokeDynamic = 18
CONSTANT_Module = 19
CONSTANT_Package = 20

TAG_NAMES = {
    CONSTANT_Utf8: "Utf8",
    CONSTANT_Integer: "Integer",
    CONSTANT_Float: "Float",
    CONSTANT_Long: "Long",
    CONSTANT_Double: "Double",
    CONSTANT_Class: "Class",
    CONSTANT_String: "String",
    CONSTANT_Fieldref: "Fieldref",
    CONSTANT_Methodref: "Methodref",
    CONSTANT_InterfaceMethodref: "InterfaceMethodref",
    CONSTANT_NameAndType: "NameAndType",
    CONSTANT_MethodHandle: "MethodHandle",
    CONSTANT_MethodType: "MethodType",
    CONSTANT_Dynamic: "Dynamic",
    CONSTANT_InvokeDynamic: "InvokeDynamic",
    CONSTANT_Module: "Module",
    CONSTANT_Package: "Package",
}

REF_KIND_NAMES = {
    1: "getField",
    2: "getStatic",
    3: "putField",
    4: "putStatic",
    5: "invokeVirtual",
    6: "invokeStatic",
    7: "invokeSpecial",
    8: "newInvokeSpecial",
    9: "invokeInterface",
}

ACC_PUBLIC = 0x0001
ACC_PRIVATE = 0x0002
ACC_PROTECTED = 0x0004
ACC_STATIC = 0x0008
ACC_FINAL = 0x0010
ACC_SYNCHRONIZED = 0x0020
ACC_BRIDGE = 0x0040
ACC_VARARGS = 0x0080
ACC_NATIVE = 0x0100
ACC_INTERFACE = 0x0200
ACC_ABSTRACT = 0x0400
ACC_STRICT = 0x0800
ACC_SYNTHETIC = 0x1000
ACC_ANNOTATION = 0x2000
ACC_ENUM = 0x4000

_METHOD_FLAG_WORDS = [
    (ACC_PUBLIC, "public"),
    (ACC_PRIVATE, "private"),
    (ACC_PROTECTED, "protected"),
    (ACC_STATIC, "static"),
    (ACC_FINAL, "final"),
    (ACC_SYNCHRONIZED, "synchronized"),
    (ACC_BRIDGE, "bridge"),
    (ACC_VARARGS, "varargs"),
    (ACC_NATIVE, "native"),
    (ACC_ABSTRACT, "abstract"),
    (ACC_STRICT, "strictfp"),
    (ACC_SYNTHETIC, "synthetic"),
]


def method_flag_words(flags: int) -> list[str]:
    return [word for bit, word in _METHOD_FLAG_WORDS if flags & bit]


class MalformedClassFile(Exception):
    def __init__(self, offset: int, reason: str):
        super().__init__(f"malformed class file at offset {offset}: {reason}")
        self.offset = offset
        self.reason = reason


class UnsupportedMajorVersion(Exception):
    def __init__(self, version: int):
        super().__init__(f"unsupported class file major version {version}")
        self.version = version


class ArchiveUnreadable(Exception):
    def __init__(self, path, reason=""):
        super().__init__(f"unreadable archive {path}: {reason}")
        self.path = path


class MethodNotFound(Exception):
    def __init__(self, key, where=""):
        super().__init__(f"method {key!r} not found{' in ' + where if where else ''}")
        self.key = key
        self.where = where


@dataclass
class ExceptionEntry:
    start_pc: int
    end_pc: int
    handler_pc: int
    catch_type: int  # pool index, 0 for catch-all


@dataclass
class CodeAttr:
    max_stack: int
    max_locals: int
    code: bytes
    exception_table: list[ExceptionEntry]
    attributes: list[tuple[str, bytes]]


@dataclass
class MemberInfo:
    access_flags: int
    name: str
    descriptor: str
    attributes: list[tuple[str, bytes]]
    code: Optional[CodeAttr] = None
    exceptions: list[str] = field(default_factory=list)  # thrown class names

    @property
    def key(self) -> str:
        return self.name + self.descriptor

    @property
    def is_static(self) -> bool:
        return bool(self.access_flags & ACC_STATIC)

    @property
    def is_abstract(self) -> bool:
        return bool(self.access_flags & ACC_ABSTRACT)


@dataclass
class BootstrapMethod:
    method_ref: int  # MethodHandle pool index
    arguments: list[int]  # pool indexes


@dataclass
class ClassModel:
    minor_version: int
    major_version: int
    pool: list  # 1-based; entries are (tag, ...) tuples, None for padding slots
    access_flags: int
    this_class: str  # internal name, e.g. org/example/X
    super_class: Optional[str]
    interfaces: list[str]
    fields: list[MemberInfo]
    methods: list[MemberInfo]
    attributes: list[tuple[str, bytes]]
    bootstrap_methods: list[BootstrapMethod] = field(default_factory=list)

    # --- constant pool accessors ---------------------------------------

    def entry(self, index: int, expect_tag: Optional[int] = None):
        if index < 1 or index >= len(self.pool) or self.pool[index] is None:
            raise MalformedClassFile(0, f"constant pool index {index} out of range")
        ent = self.pool[index]
        if expect_tag is not None and ent[0] != expect_tag:
            raise MalformedClassFile(
                0,
                f"constant pool index {index}: expected {TAG_NAMES.get(expect_tag)},"
                f" found {TAG_NAMES.get(ent[0], ent[0])}",
            )
        return ent

    def utf8(self, index: int) -> str:
        return self.entry(index, CONSTANT_Utf8)[1]

    def class_name(self, index: int) -> str:
        return self.utf8(self.entry(index, CONSTANT_Class)[1])

    def name_and_type(self, index: int) -> tuple[str, str]:
        _, name_i, desc_i = self.entry(index, CONSTANT_NameAndType)
        return self.utf8(name_i), self.utf8(desc_i)

    def member_ref(self, index: int) -> tuple[str, str, str]:
        tag, class_i, nat_i = self.entry(index)
        if tag not in (CONSTANT_Fieldref, CONSTANT_Methodref, CONSTANT_InterfaceMethodref):
            raise MalformedClassFile(0, f"index {index} is not a member reference")
        owner = self.class_name(class_i)
        name, desc = self.name_and_type(nat_i)
        return owner, name, desc

    def find_method(self, name: str, descriptor: Optional[str] = None) -> list[MemberInfo]:
        return [
            m
            for m in self.methods
            if m.name == name and (descriptor is None or m.descriptor == descriptor)
        ]

    @property
    def binary_name(self) -> str:
        return self.this_class.replace("/", ".")

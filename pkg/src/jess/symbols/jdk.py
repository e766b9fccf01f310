"""Pinned baseline of JDK type and member signatures.

Shipped with the tool so resolution does not require a JDK image.  Coverage
is the practical core: java.lang, collection interfaces, common IO and the
functional interfaces.  Method entries are (name, param_types, return_type,
static, abstract); field entries are (name, type, static); ctor entries are
parameter tuples."""

from __future__ import annotations

O = "java.lang.Object"
S = "java.lang.String"
CS = "java.lang.CharSequence"


def _t(kind, sup=None, interfaces=(), ctors=(), methods=(), fields=(), abstract=False):
    return {
        "kind": kind,
        "super": sup,
        "interfaces": tuple(interfaces),
        "ctors": tuple(ctors),
        "methods": tuple(methods),
        "fields": tuple(fields),
        "abstract": abstract,
    }


def _exc(sup):
    return _t(
        "class",
        sup,
        ctors=((), (S,), (S, "java.lang.Throwable"), ("java.lang.Throwable",)),
    )


JDK_TYPES: dict[str, dict] = {
    O: _t(
        "class",
        None,
        ctors=((),),
        methods=(
            ("toString", (), S, False, False),
            ("equals", (O,), "boolean", False, False),
            ("hashCode", (), "int", False, False),
            ("getClass", (), "java.lang.Class", False, False),
            ("clone", (), O, False, False),
            ("notify", (), "void", False, False),
            ("notifyAll", (), "void", False, False),
            ("wait", (), "void", False, False),
        ),
    ),
    S: _t(
        "class",
        O,
        interfaces=(CS, "java.lang.Comparable"),
        ctors=((), (S,), ("char[]",), ("byte[]",)),
        methods=(
            ("length", (), "int", False, False),
            ("charAt", ("int",), "char", False, False),
            ("isEmpty", (), "boolean", False, False),
            ("isBlank", (), "boolean", False, False),
            ("substring", ("int",), S, False, False),
            ("substring", ("int", "int"), S, False, False),
            ("indexOf", (S,), "int", False, False),
            ("indexOf", ("int",), "int", False, False),
            ("lastIndexOf", (S,), "int", False, False),
            ("contains", (CS,), "boolean", False, False),
            ("startsWith", (S,), "boolean", False, False),
            ("endsWith", (S,), "boolean", False, False),
            ("equalsIgnoreCase", (S,), "boolean", False, False),
            ("compareTo", (S,), "int", False, False),
            ("concat", (S,), S, False, False),
            ("replace", (CS, CS), S, False, False),
            ("trim", (), S, False, False),
            ("strip", (), S, False, False),
            ("toLowerCase", (), S, False, False),
            ("toUpperCase", (), S, False, False),
            ("split", (S,), "java.lang.String[]", False, False),
            ("toCharArray", (), "char[]", False, False),
            ("getBytes", (), "byte[]", False, False),
            ("hashCode", (), "int", False, False),
            ("matches", (S,), "boolean", False, False),
            ("valueOf", (O,), S, True, False),
            ("valueOf", ("int",), S, True, False),
            ("valueOf", ("long",), S, True, False),
            ("valueOf", ("double",), S, True, False),
            ("valueOf", ("boolean",), S, True, False),
            ("valueOf", ("char",), S, True, False),
            ("format", (S, "java.lang.Object[]"), S, True, False),
            ("join", (CS, "java.lang.CharSequence[]"), S, True, False),
        ),
    ),
    CS: _t(
        "interface",
        None,
        methods=(
            ("length", (), "int", False, True),
            ("charAt", ("int",), "char", False, True),
            ("toString", (), S, False, True),
        ),
        abstract=True,
    ),
    "java.lang.StringBuilder": _t(
        "class",
        O,
        interfaces=(CS,),
        ctors=((), (S,), ("int",)),
        methods=(
            ("append", (S,), "java.lang.StringBuilder", False, False),
            ("append", (O,), "java.lang.StringBuilder", False, False),
            ("append", ("int",), "java.lang.StringBuilder", False, False),
            ("append", ("long",), "java.lang.StringBuilder", False, False),
            ("append", ("char",), "java.lang.StringBuilder", False, False),
            ("append", ("boolean",), "java.lang.StringBuilder", False, False),
            ("append", ("double",), "java.lang.StringBuilder", False, False),
            ("toString", (), S, False, False),
            ("length", (), "int", False, False),
            ("charAt", ("int",), "char", False, False),
            ("reverse", (), "java.lang.StringBuilder", False, False),
            ("insert", ("int", S), "java.lang.StringBuilder", False, False),
        ),
    ),
    "java.lang.Class": _t(
        "class",
        O,
        methods=(
            ("getName", (), S, False, False),
            ("getSimpleName", (), S, False, False),
            ("isInstance", (O,), "boolean", False, False),
        ),
    ),
    "java.lang.System": _t(
        "class",
        O,
        methods=(
            ("currentTimeMillis", (), "long", True, False),
            ("nanoTime", (), "long", True, False),
            ("getProperty", (S,), S, True, False),
            ("getenv", (S,), S, True, False),
            ("lineSeparator", (), S, True, False),
            ("exit", ("int",), "void", True, False),
            ("arraycopy", (O, "int", O, "int", "int"), "void", True, False),
            ("identityHashCode", (O,), "int", True, False),
        ),
        fields=(
            ("out", "java.io.PrintStream", True),
            ("err", "java.io.PrintStream", True),
            ("in", "java.io.InputStream", True),
        ),
    ),
    "java.lang.Math": _t(
        "class",
        O,
        methods=(
            ("max", ("int", "int"), "int", True, False),
            ("max", ("long", "long"), "long", True, False),
            ("max", ("double", "double"), "double", True, False),
            ("min", ("int", "int"), "int", True, False),
            ("min", ("long", "long"), "long", True, False),
            ("min", ("double", "double"), "double", True, False),
            ("abs", ("int",), "int", True, False),
            ("abs", ("long",), "long", True, False),
            ("abs", ("double",), "double", True, False),
            ("sqrt", ("double",), "double", True, False),
            ("pow", ("double", "double"), "double", True, False),
            ("floor", ("double",), "double", True, False),
            ("ceil", ("double",), "double", True, False),
            ("round", ("double",), "long", True, False),
            ("random", (), "double", True, False),
        ),
        fields=(("PI", "double", True), ("E", "double", True)),
    ),
    "java.lang.Integer": _t(
        "class",
        "java.lang.Number",
        ctors=(("int",), (S,)),
        methods=(
            ("parseInt", (S,), "int", True, False),
            ("valueOf", ("int",), "java.lang.Integer", True, False),
            ("valueOf", (S,), "java.lang.Integer", True, False),
            ("toString", ("int",), S, True, False),
            ("intValue", (), "int", False, False),
            ("compareTo", ("java.lang.Integer",), "int", False, False),
        ),
        fields=(("MAX_VALUE", "int", True), ("MIN_VALUE", "int", True)),
    ),
    "java.lang.Long": _t(
        "class",
        "java.lang.Number",
        ctors=(("long",), (S,)),
        methods=(
            ("parseLong", (S,), "long", True, False),
            ("valueOf", ("long",), "java.lang.Long", True, False),
            ("longValue", (), "long", False, False),
            ("toString", ("long",), S, True, False),
        ),
        fields=(("MAX_VALUE", "long", True), ("MIN_VALUE", "long", True)),
    ),
    "java.lang.Double": _t(
        "class",
        "java.lang.Number",
        ctors=(("double",),),
        methods=(
            ("parseDouble", (S,), "double", True, False),
            ("valueOf", ("double",), "java.lang.Double", True, False),
            ("doubleValue", (), "double", False, False),
            ("toString", ("double",), S, True, False),
            ("isNaN", ("double",), "boolean", True, False),
        ),
        fields=(("MAX_VALUE", "double", True), ("MIN_VALUE", "double", True)),
    ),
    "java.lang.Float": _t(
        "class",
        "java.lang.Number",
        ctors=(("float",),),
        methods=(
            ("parseFloat", (S,), "float", True, False),
            ("valueOf", ("float",), "java.lang.Float", True, False),
            ("floatValue", (), "float", False, False),
        ),
    ),
    "java.lang.Short": _t(
        "class", "java.lang.Number",
        methods=(("parseShort", (S,), "short", True, False),
                 ("valueOf", ("short",), "java.lang.Short", True, False),
                 ("shortValue", (), "short", False, False)),
    ),
    "java.lang.Byte": _t(
        "class", "java.lang.Number",
        methods=(("parseByte", (S,), "byte", True, False),
                 ("valueOf", ("byte",), "java.lang.Byte", True, False),
                 ("byteValue", (), "byte", False, False)),
    ),
    "java.lang.Character": _t(
        "class",
        O,
        methods=(
            ("valueOf", ("char",), "java.lang.Character", True, False),
            ("charValue", (), "char", False, False),
            ("isDigit", ("char",), "boolean", True, False),
            ("isLetter", ("char",), "boolean", True, False),
            ("toUpperCase", ("char",), "char", True, False),
        ),
    ),
    "java.lang.Boolean": _t(
        "class",
        O,
        methods=(
            ("parseBoolean", (S,), "boolean", True, False),
            ("valueOf", ("boolean",), "java.lang.Boolean", True, False),
            ("booleanValue", (), "boolean", False, False),
        ),
        fields=(("TRUE", "java.lang.Boolean", True), ("FALSE", "java.lang.Boolean", True)),
    ),
    "java.lang.Number": _t(
        "class",
        O,
        ctors=((),),
        methods=(
            ("intValue", (), "int", False, True),
            ("longValue", (), "long", False, True),
            ("floatValue", (), "float", False, True),
            ("doubleValue", (), "double", False, True),
        ),
        abstract=True,
    ),
    "java.lang.Enum": _t(
        "class",
        O,
        methods=(
            ("name", (), S, False, False),
            ("ordinal", (), "int", False, False),
            ("toString", (), S, False, False),
        ),
    ),
    "java.lang.Thread": _t(
        "class",
        O,
        interfaces=("java.lang.Runnable",),
        ctors=((), ("java.lang.Runnable",), ("java.lang.Runnable", S)),
        methods=(
            ("start", (), "void", False, False),
            ("run", (), "void", False, False),
            ("join", (), "void", False, False),
            ("interrupt", (), "void", False, False),
            ("sleep", ("long",), "void", True, False),
            ("currentThread", (), "java.lang.Thread", True, False),
        ),
    ),
    "java.lang.Runnable": _t(
        "interface",
        methods=(("run", (), "void", False, True),),
        abstract=True,
    ),
    "java.lang.Comparable": _t(
        "interface",
        methods=(("compareTo", (O,), "int", False, True),),
        abstract=True,
    ),
    "java.lang.Iterable": _t(
        "interface",
        methods=(("iterator", (), "java.util.Iterator", False, True),),
        abstract=True,
    ),
    "java.lang.AutoCloseable": _t(
        "interface",
        methods=(("close", (), "void", False, True),),
        abstract=True,
    ),
    "java.lang.Throwable": _t(
        "class",
        O,
        ctors=((), (S,), (S, "java.lang.Throwable"), ("java.lang.Throwable",)),
        methods=(
            ("getMessage", (), S, False, False),
            ("getLocalizedMessage", (), S, False, False),
            ("getCause", (), "java.lang.Throwable", False, False),
            ("printStackTrace", (), "void", False, False),
            ("addSuppressed", ("java.lang.Throwable",), "void", False, False),
            ("initCause", ("java.lang.Throwable",), "java.lang.Throwable", False, False),
            ("toString", (), S, False, False),
        ),
    ),
    "java.lang.Exception": _exc("java.lang.Throwable"),
    "java.lang.RuntimeException": _exc("java.lang.Exception"),
    "java.lang.Error": _exc("java.lang.Throwable"),
    "java.lang.IllegalArgumentException": _exc("java.lang.RuntimeException"),
    "java.lang.IllegalStateException": _exc("java.lang.RuntimeException"),
    "java.lang.NullPointerException": _exc("java.lang.RuntimeException"),
    "java.lang.UnsupportedOperationException": _exc("java.lang.RuntimeException"),
    "java.lang.IndexOutOfBoundsException": _exc("java.lang.RuntimeException"),
    "java.lang.ArithmeticException": _exc("java.lang.RuntimeException"),
    "java.lang.ClassCastException": _exc("java.lang.RuntimeException"),
    "java.lang.NumberFormatException": _exc("java.lang.IllegalArgumentException"),
    "java.lang.InterruptedException": _exc("java.lang.Exception"),
    "java.lang.Override": _t("annotation"),
    "java.lang.Deprecated": _t("annotation"),
    "java.lang.SuppressWarnings": _t("annotation"),
    "java.lang.FunctionalInterface": _t("annotation"),
    "java.lang.SafeVarargs": _t("annotation"),
    "java.lang.Void": _t("class", O),
    "java.util.Iterator": _t(
        "interface",
        methods=(
            ("hasNext", (), "boolean", False, True),
            ("next", (), O, False, True),
            ("remove", (), "void", False, False),
        ),
        abstract=True,
    ),
    "java.util.Collection": _t(
        "interface",
        interfaces=("java.lang.Iterable",),
        methods=(
            ("size", (), "int", False, True),
            ("isEmpty", (), "boolean", False, True),
            ("add", (O,), "boolean", False, True),
            ("remove", (O,), "boolean", False, True),
            ("contains", (O,), "boolean", False, True),
            ("clear", (), "void", False, True),
            ("toArray", (), "java.lang.Object[]", False, True),
        ),
        abstract=True,
    ),
    "java.util.List": _t(
        "interface",
        interfaces=("java.util.Collection",),
        methods=(
            ("get", ("int",), O, False, True),
            ("set", ("int", O), O, False, True),
            ("add", ("int", O), "void", False, True),
            ("indexOf", (O,), "int", False, True),
            ("of", (), "java.util.List", True, False),
            ("of", (O,), "java.util.List", True, False),
            ("of", (O, O), "java.util.List", True, False),
        ),
        abstract=True,
    ),
    "java.util.Set": _t(
        "interface",
        interfaces=("java.util.Collection",),
        methods=(("of", (), "java.util.Set", True, False),),
        abstract=True,
    ),
    "java.util.Map": _t(
        "interface",
        methods=(
            ("get", (O,), O, False, True),
            ("put", (O, O), O, False, True),
            ("remove", (O,), O, False, True),
            ("containsKey", (O,), "boolean", False, True),
            ("containsValue", (O,), "boolean", False, True),
            ("size", (), "int", False, True),
            ("isEmpty", (), "boolean", False, True),
            ("keySet", (), "java.util.Set", False, True),
            ("values", (), "java.util.Collection", False, True),
            ("clear", (), "void", False, True),
            ("getOrDefault", (O, O), O, False, False),
        ),
        abstract=True,
    ),
    "java.util.ArrayList": _t(
        "class",
        O,
        interfaces=("java.util.List",),
        ctors=((), ("int",), ("java.util.Collection",)),
        methods=(
            ("add", (O,), "boolean", False, False),
            ("get", ("int",), O, False, False),
            ("size", (), "int", False, False),
            ("isEmpty", (), "boolean", False, False),
            ("remove", ("int",), O, False, False),
            ("contains", (O,), "boolean", False, False),
            ("iterator", (), "java.util.Iterator", False, False),
            ("clear", (), "void", False, False),
        ),
    ),
    "java.util.HashMap": _t(
        "class",
        O,
        interfaces=("java.util.Map",),
        ctors=((), ("int",)),
        methods=(
            ("get", (O,), O, False, False),
            ("put", (O, O), O, False, False),
            ("containsKey", (O,), "boolean", False, False),
            ("size", (), "int", False, False),
            ("keySet", (), "java.util.Set", False, False),
        ),
    ),
    "java.util.HashSet": _t(
        "class",
        O,
        interfaces=("java.util.Set",),
        ctors=((),),
        methods=(
            ("add", (O,), "boolean", False, False),
            ("contains", (O,), "boolean", False, False),
            ("size", (), "int", False, False),
            ("iterator", (), "java.util.Iterator", False, False),
        ),
    ),
    "java.util.Arrays": _t(
        "class",
        O,
        methods=(
            ("asList", ("java.lang.Object[]",), "java.util.List", True, False),
            ("toString", ("java.lang.Object[]",), S, True, False),
            ("toString", ("int[]",), S, True, False),
            ("sort", ("java.lang.Object[]",), "void", True, False),
            ("sort", ("int[]",), "void", True, False),
            ("copyOf", ("java.lang.Object[]", "int"), "java.lang.Object[]", True, False),
            ("equals", ("java.lang.Object[]", "java.lang.Object[]"), "boolean", True, False),
        ),
    ),
    "java.util.Objects": _t(
        "class",
        O,
        methods=(
            ("requireNonNull", (O,), O, True, False),
            ("requireNonNull", (O, S), O, True, False),
            ("equals", (O, O), "boolean", True, False),
            ("hash", ("java.lang.Object[]",), "int", True, False),
            ("toString", (O,), S, True, False),
            ("isNull", (O,), "boolean", True, False),
            ("nonNull", (O,), "boolean", True, False),
        ),
    ),
    "java.util.Optional": _t(
        "class",
        O,
        methods=(
            ("of", (O,), "java.util.Optional", True, False),
            ("ofNullable", (O,), "java.util.Optional", True, False),
            ("empty", (), "java.util.Optional", True, False),
            ("get", (), O, False, False),
            ("isPresent", (), "boolean", False, False),
            ("isEmpty", (), "boolean", False, False),
            ("orElse", (O,), O, False, False),
        ),
    ),
    "java.util.Collections": _t(
        "class",
        O,
        methods=(
            ("emptyList", (), "java.util.List", True, False),
            ("singletonList", (O,), "java.util.List", True, False),
            ("unmodifiableList", ("java.util.List",), "java.util.List", True, False),
            ("sort", ("java.util.List",), "void", True, False),
        ),
    ),
    "java.util.Random": _t(
        "class",
        O,
        ctors=((), ("long",)),
        methods=(
            ("nextInt", (), "int", False, False),
            ("nextInt", ("int",), "int", False, False),
            ("nextLong", (), "long", False, False),
            ("nextDouble", (), "double", False, False),
            ("nextBoolean", (), "boolean", False, False),
        ),
    ),
    "java.io.PrintStream": _t(
        "class",
        O,
        methods=(
            ("println", (), "void", False, False),
            ("println", (S,), "void", False, False),
            ("println", (O,), "void", False, False),
            ("println", ("int",), "void", False, False),
            ("println", ("long",), "void", False, False),
            ("println", ("double",), "void", False, False),
            ("println", ("boolean",), "void", False, False),
            ("println", ("char",), "void", False, False),
            ("print", (S,), "void", False, False),
            ("print", ("int",), "void", False, False),
            ("print", (O,), "void", False, False),
            ("printf", (S, "java.lang.Object[]"), "java.io.PrintStream", False, False),
            ("flush", (), "void", False, False),
            ("close", (), "void", False, False),
        ),
    ),
    "java.io.InputStream": _t(
        "class",
        O,
        interfaces=("java.io.Closeable",),
        methods=(
            ("read", (), "int", False, True),
            ("close", (), "void", False, False),
        ),
        abstract=True,
    ),
    "java.io.OutputStream": _t(
        "class",
        O,
        interfaces=("java.io.Closeable",),
        methods=(
            ("write", ("int",), "void", False, True),
            ("flush", (), "void", False, False),
            ("close", (), "void", False, False),
        ),
        abstract=True,
    ),
    "java.io.Closeable": _t(
        "interface",
        interfaces=("java.lang.AutoCloseable",),
        methods=(("close", (), "void", False, True),),
        abstract=True,
    ),
    "java.io.IOException": _exc("java.lang.Exception"),
    "java.io.UncheckedIOException": _exc("java.lang.RuntimeException"),
    "java.io.FileNotFoundException": _exc("java.io.IOException"),
    "java.io.File": _t(
        "class",
        O,
        ctors=((S,), (S, S)),
        methods=(
            ("getName", (), S, False, False),
            ("getPath", (), S, False, False),
            ("exists", (), "boolean", False, False),
            ("isDirectory", (), "boolean", False, False),
            ("delete", (), "boolean", False, False),
            ("length", (), "long", False, False),
        ),
    ),
    "java.util.function.Function": _t(
        "interface",
        methods=(("apply", (O,), O, False, True),),
        abstract=True,
    ),
    "java.util.function.BiFunction": _t(
        "interface",
        methods=(("apply", (O, O), O, False, True),),
        abstract=True,
    ),
    "java.util.function.Supplier": _t(
        "interface",
        methods=(("get", (), O, False, True),),
        abstract=True,
    ),
    "java.util.function.Consumer": _t(
        "interface",
        methods=(("accept", (O,), "void", False, True),),
        abstract=True,
    ),
    "java.util.function.Predicate": _t(
        "interface",
        methods=(("test", (O,), "boolean", False, True),),
        abstract=True,
    ),
}


def jdk_lookup(fqn: str):
    return JDK_TYPES.get(fqn)


def jdk_simple_names() -> dict[str, list[str]]:
    out: dict[str, list[str]] = {}
    for fqn in JDK_TYPES:
        out.setdefault(fqn.rsplit(".", 1)[-1], []).append(fqn)
    return out

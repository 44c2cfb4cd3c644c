"""Named example codes and the plain-text code file format."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .code import LinearCode, new_code
from .errors import ParseError
from .exact import make_field


@dataclass(frozen=True)
class Example:
    name: str
    field: str
    rows: tuple
    description: str

    def code(self, field: str | None = None) -> LinearCode:
        return new_code(make_field(field or self.field), self.rows)


_FIXED = {
    "paper-g1": Example(
        "paper-g1", "F2",
        ((1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1)),
        "[4,3,2] MDS code, forms x, y, z, x+y+z",
    ),
    "paper-g2": Example(
        "paper-g2", "F7",
        ((1, 0, 0, 1, 1), (0, 1, 0, 1, 2), (0, 0, 1, 1, 5)),
        "[5,3,3] MDS code, forms x, y, z, x+y+z, x+2y+5z",
    ),
    "paper-c2": Example(
        "paper-c2", "Q",
        ((1, 0, 1, 1, 0, 0), (0, 1, 1, -1, 0, 1), (0, 0, 0, 0, 1, -1)),
        "[6,3,2] code, forms x, y, x+y, x-y, z, y-z",
    ),
    "braid6": Example(
        "braid6", "Q",
        ((1, 0, 0, 1, 1, 0), (0, 1, 0, -1, 0, 1), (0, 0, 1, 0, -1, -1)),
        "[6,3,3] braid arrangement, forms x, y, z, x-y, x-z, y-z",
    ),
    "hamming74": Example(
        "hamming74", "F2",
        (
            (1, 0, 0, 0, 1, 1, 0),
            (0, 1, 0, 0, 1, 0, 1),
            (0, 0, 1, 0, 0, 1, 1),
            (0, 0, 0, 1, 1, 1, 1),
        ),
        "[7,4,3] binary Hamming code, systematic generator",
    ),
}


def repetition_rows(n: int) -> tuple:
    return ((1,) * n,)


def identity_rows(k: int) -> tuple:
    return tuple(tuple(int(i == j) for j in range(k)) for i in range(k))


def get_example(name: str) -> Example:
    if name in _FIXED:
        return _FIXED[name]
    m = re.fullmatch(r"(rep|id)-(\d+)", name)
    if m:
        size = int(m.group(2))
        if size < 1:
            raise KeyError(name)
        if m.group(1) == "rep":
            return Example(name, "F2", repetition_rows(size), f"[{size},1,{size}] repetition code")
        return Example(name, "F2", identity_rows(size), f"[{size},{size},1] full space")
    raise KeyError(f"unknown example {name!r}; see list-examples")


def list_examples() -> list[Example]:
    return list(_FIXED.values()) + [
        Example("rep-n", "F2", (), "[n,1,n] repetition code, e.g. rep-4"),
        Example("id-k", "F2", (), "[k,k,1] identity generator, e.g. id-3"),
    ]


def parse_code_file(text: str) -> LinearCode:
    """Parse ``field <F>`` / ``k n`` / k rows of n entries; '#' lines are comments."""
    lines = [
        (no, raw) for no, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty code file")
    no, raw = lines[0]
    parts = raw.split()
    if len(parts) != 2 or parts[0].lower() != "field":
        raise ParseError("expected 'field <Q|F<p>>'", no, 1)
    try:
        field = make_field(parts[1])
    except ValueError as exc:
        if type(exc) is not ValueError:
            raise
        raise ParseError(str(exc), no, raw.index(parts[1]) + 1) from None
    if len(lines) < 2:
        raise ParseError("missing dimensions line 'k n'", no + 1)
    no, raw = lines[1]
    dims = raw.split()
    if len(dims) != 2 or not all(d.isdigit() for d in dims):
        raise ParseError("expected dimensions 'k n'", no, 1)
    k, n = int(dims[0]), int(dims[1])
    body = lines[2:]
    if len(body) != k:
        raise ParseError(f"expected {k} matrix rows, found {len(body)}", body[-1][0] if body else no)
    rows = []
    for no, raw in body:
        entries = list(re.finditer(r"\S+", raw))
        if len(entries) != n:
            raise ParseError(f"expected {n} entries, found {len(entries)}", no, 1)
        row = []
        for m in entries:
            tok = m.group(0)
            if not re.fullmatch(r"[+-]?\d+(/[+-]?\d+)?", tok):
                raise ParseError(f"bad entry {tok!r}", no, m.start() + 1)
            if "/" in tok:
                if field.is_finite:
                    raise ParseError("rational entries are only allowed over Q", no, m.start() + 1)
                if int(tok.split("/")[1]) == 0:
                    raise ParseError("zero denominator", no, m.start() + 1)
            row.append(field(tok))
        rows.append(row)
    return new_code(field, rows)


def format_code_file(code: LinearCode) -> str:
    F = code.field
    lines = [f"field {F.name}", f"{code.k} {code.n}"]
    lines += [" ".join(str(F.signed(x)) for x in row) for row in code.G.rows]
    return "\n".join(lines) + "\n"

"""Text formats for ideals, universes and toric matrices.

Ideal and universe files share one layout: a header such as
``vars=3 order=grevlex field=QQ`` followed by one polynomial per line.
An optional ``names=x,y,z`` item replaces the default names ``x1..xn``.
Blank lines and lines starting with ``#`` are ignored.
"""

from pathlib import Path

import numpy as np

from .poly import GeneratorSet, PolynomialRing, parse_field

__all__ = [
    "parse_header", "format_header", "read_polynomials", "write_polynomials",
    "read_ideal", "read_matrix", "write_matrix", "parse_ideal_text",
]


def parse_header(line):
    fields = {}
    for item in line.split():
        if "=" not in item:
            raise ValueError(f"bad header item {item!r}")
        k, v = item.split("=", 1)
        fields[k] = v
    if "vars" not in fields:
        raise ValueError("header needs vars=<n>")
    n = int(fields["vars"])
    order = fields.get("order", "grevlex")
    field = parse_field(fields.get("field", "QQ"))
    names = fields["names"].split(",") if "names" in fields else None
    return PolynomialRing(n, order, field, names)


def format_header(ring):
    head = f"vars={ring.n} order={ring.order.kind} field={ring.field.name}"
    if ring.names != PolynomialRing(ring.n).names:
        head += " names=" + ",".join(ring.names)
    return head


def _lines(text):
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


def parse_ideal_text(text, order=None, field=None):
    """Parse file contents; ``order``/``field`` override the header when given."""
    lines = list(_lines(text))
    if not lines:
        raise ValueError("empty input")
    ring = parse_header(lines[0])
    if order is not None or field is not None:
        ring = PolynomialRing(ring.n, order or ring.order, field or ring.field, ring.names)
    return ring, [ring.parse(line) for line in lines[1:]]


def read_polynomials(path, order=None, field=None):
    return parse_ideal_text(Path(path).read_text(), order, field)


def read_ideal(path, order=None, field=None):
    ring, polys = read_polynomials(path, order, field)
    if not polys:
        raise ValueError(f"{path}: no generators")
    return GeneratorSet(polys, ring)


def write_polynomials(path, ring, polys):
    lines = [format_header(ring)] + [str(p) for p in polys]
    Path(path).write_text("\n".join(lines) + "\n")


def read_matrix(path):
    """Read ``rows cols`` followed by row-major integers."""
    tokens = Path(path).read_text().split()
    if len(tokens) < 2:
        raise ValueError(f"{path}: missing matrix shape")
    rows, cols = int(tokens[0]), int(tokens[1])
    values = [int(t) for t in tokens[2:]]
    if len(values) != rows * cols:
        raise ValueError(f"{path}: expected {rows * cols} entries, found {len(values)}")
    return np.array(values, dtype=np.int64).reshape(rows, cols)


def write_matrix(path, A):
    A = np.asarray(A, dtype=np.int64)
    lines = [f"{A.shape[0]} {A.shape[1]}"] + [" ".join(str(int(x)) for x in row) for row in A]
    Path(path).write_text("\n".join(lines) + "\n")

"""Plain-text interval and packing files."""

from __future__ import annotations

from fractions import Fraction

from .graph_core import IntervalInstance


class ParseError(ValueError):
    def __init__(self, path, lineno, msg):
        super().__init__(f"{path}:{lineno}: {msg}")
        self.lineno = lineno


def _number(text: str) -> Fraction:
    if "/" in text:
        p, q = text.split("/", 1)
        return Fraction(int(p), int(q))
    return Fraction(int(text))


def format_number(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_intervals(text: str, path: str = "<string>") -> IntervalInstance:
    triples = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(path, lineno, f"expected 'name lo hi', got {line!r}")
        name, lo, hi = parts
        try:
            lo_q, hi_q = _number(lo), _number(hi)
        except (ValueError, ZeroDivisionError):
            raise ParseError(path, lineno, f"bad endpoint in {line!r}") from None
        if lo_q > hi_q:
            raise ParseError(path, lineno, f"lo > hi in {line!r}")
        if name in seen:
            raise ParseError(path, lineno, f"duplicate vertex name {name!r}")
        seen.add(name)
        triples.append((name, lo_q, hi_q))
    return IntervalInstance.from_triples(triples)


def format_intervals(instance: IntervalInstance, header: str | None = None) -> str:
    lines = [f"# {header}"] if header else []
    for iv in instance.intervals:
        lines.append(f"{iv.name} {format_number(iv.lo)} {format_number(iv.hi)}")
    return "\n".join(lines) + "\n"


def read_intervals(path) -> IntervalInstance:
    with open(path) as fh:
        return parse_intervals(fh.read(), str(path))


def write_intervals(instance: IntervalInstance, path, header: str | None = None) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(format_intervals(instance, header))


def parse_packing(text: str, instance: IntervalInstance, path: str = "<string>") -> list[tuple[int, ...]]:
    """One triangle per line as three vertex names; returns tuples of vertex ids."""
    ids = {name: i for i, name in enumerate(instance.names)}
    packing = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(path, lineno, f"expected three vertex names, got {line!r}")
        missing = [p for p in parts if p not in ids]
        if missing:
            raise ParseError(path, lineno, f"unknown vertex {missing[0]!r}")
        packing.append(tuple(ids[p] for p in parts))
    return packing


def format_packing(packing, instance: IntervalInstance) -> str:
    names = instance.names
    return "".join(" ".join(names[v] for v in tri) + "\n" for tri in packing)

"""Text formats for networks and community lists (1-based ids on disk)."""

from __future__ import annotations

from typing import Iterable

from .model import DomainError, PreferenceNetwork, canonical


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(line: str):
    """Yield ``(column, token)`` pairs, columns 1-based."""
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        yield col + 1, tok
        col += len(tok)


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def _int(tok: str, lineno: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, col, f"expected an integer, got {tok!r}") from None


def parse_network(text: str) -> PreferenceNetwork:
    """Parse ``n`` followed by ``n`` permutations of ``1..n``, one per individual."""
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError(1, 1, "empty network file")
    lineno, raw = lines[0]
    header = list(_tokens(raw))
    if len(header) != 1:
        raise ParseError(lineno, header[1][0] if len(header) > 1 else 1, "first line must hold only the population size")
    n = _int(header[0][1], lineno, header[0][0])
    if n < 1:
        raise ParseError(lineno, header[0][0], "population size must be at least 1")
    body = lines[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(where, 1, f"expected {n} preference lines, found {len(body)}")
    orders = []
    for lineno, raw in body:
        seen = set()
        order = []
        for col, tok in _tokens(raw):
            u = _int(tok, lineno, col)
            if not 1 <= u <= n:
                raise ParseError(lineno, col, f"individual {u} out of range 1..{n}")
            if u in seen:
                raise ParseError(lineno, col, f"individual {u} listed twice")
            seen.add(u)
            order.append(u)
        if len(order) != n:
            missing = sorted(set(range(1, n + 1)) - seen)
            raise ParseError(lineno, len(raw.rstrip()) + 1, f"order ranks {len(order)} of {n} individuals; missing {missing}")
        orders.append(order)
    return PreferenceNetwork.from_orders(orders, one_based=True)


def format_network(net: PreferenceNetwork) -> str:
    rows = [str(net.n)] + [" ".join(map(str, row)) for row in net.to_one_based()]
    return "\n".join(rows) + "\n"


def read_network(path: str) -> PreferenceNetwork:
    with open(path, encoding="utf-8") as fh:
        return parse_network(fh.read())


def parse_order(text: str, n: int | None = None) -> tuple[int, ...]:
    """A single 1-based permutation line, returned 0-based."""
    lines = list(_data_lines(text))
    if len(lines) != 1:
        raise ParseError(1, 1, "expected exactly one order line")
    lineno, raw = lines[0]
    values = [_int(tok, lineno, col) - 1 for col, tok in _tokens(raw)]
    size = len(values) if n is None else n
    if sorted(values) != list(range(size)):
        raise ParseError(lineno, 1, f"not a permutation of 1..{size}")
    return tuple(values)


def format_communities(communities: Iterable[Iterable[int]]) -> str:
    return "".join(" ".join(str(u + 1) for u in c) + "\n" for c in canonical(communities))


def parse_communities(text: str) -> list[tuple[int, ...]]:
    """Parse a community list; lines must be sorted, unique and canonically ordered."""
    out = []
    for lineno, raw in _data_lines(text):
        ids = [_int(tok, lineno, col) - 1 for col, tok in _tokens(raw)]
        if ids != sorted(set(ids)):
            raise ParseError(lineno, 1, "community ids must be strictly ascending")
        if any(u < 0 for u in ids):
            raise ParseError(lineno, 1, "ids are 1-based")
        out.append(tuple(ids))
    if out != canonical(out):
        raise ParseError(1, 1, "communities must be unique and ordered by size, then lexicographically")
    return out


def parse_id_list(text: str, n: int) -> frozenset:
    """``"1,2,3"`` (commas or spaces) to a 0-based set."""
    ids = []
    for tok in text.replace(",", " ").split():
        try:
            ids.append(int(tok))
        except ValueError:
            raise DomainError(f"bad individual id {tok!r}") from None
    if not ids:
        raise DomainError("empty set")
    bad = [u for u in ids if not 1 <= u <= n]
    if bad:
        raise DomainError(f"ids out of range 1..{n}: {bad}")
    return frozenset(u - 1 for u in ids)

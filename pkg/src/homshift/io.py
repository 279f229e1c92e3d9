"""Text and JSON formats for ideals and graphs."""

from __future__ import annotations

import json
import re
from typing import Any, Sequence

from .monomial import Monomial, MonomialIdeal, minimalize


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_FACTOR = re.compile(r"\s*x(\d+)(?:\s*\^\s*(\d+))?\s*")


def render_monomial(u: Monomial, names: Sequence[str] | None = None) -> str:
    parts = []
    for i, a in enumerate(u):
        if not a:
            continue
        name = names[i] if names else f"x{i + 1}"
        parts.append(name if a == 1 else f"{name}^{a}")
    return "*".join(parts) if parts else "1"


def render_ideal(I: MonomialIdeal, names: Sequence[str] | None = None) -> str:
    """Generators one per line in canonical order (empty string for the zero ideal)."""
    return "".join(render_monomial(g, names) + "\n" for g in I.gens)


def ideal_to_dict(I: MonomialIdeal, names: Sequence[str] | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {"nvars": I.nvars, "gens": [list(g) for g in I.gens]}
    if names:
        doc["names"] = list(names)
    return doc


def ideal_to_json(I: MonomialIdeal) -> str:
    return json.dumps(ideal_to_dict(I), separators=(",", ":"))


def ideal_from_dict(doc: dict[str, Any]) -> MonomialIdeal:
    try:
        n = int(doc["nvars"])
        gens = doc["gens"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"ideal document needs 'nvars' and 'gens' ({exc})") from None
    if n < 1:
        raise ParseError("nvars must be positive")
    for k, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != n:
            raise ParseError(f"generator {k} is not a list of {n} exponents")
        if any(not isinstance(a, int) or isinstance(a, bool) or a < 0 for a in g):
            raise ParseError(f"generator {k} has an invalid exponent")
    return minimalize(gens, n)


def parse_monomial(token: str, nvars: int | None, line: int = 1, column: int = 1) -> dict[int, int]:
    """Parse ``x1^2*x3`` into {index: exponent} (0-based indices)."""
    text = token.strip()
    if text == "1":
        return {}
    exps: dict[int, int] = {}
    pos = 0
    offset = len(token) - len(token.lstrip())
    for k, piece in enumerate(text.split("*")):
        m = _FACTOR.fullmatch(piece)
        col = column + offset + pos
        if not m:
            raise ParseError(f"malformed factor {piece.strip()!r}", line, col)
        idx = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if idx < 1:
            raise ParseError(f"variable index must be >= 1, got x{idx}", line, col)
        if nvars is not None and idx > nvars:
            raise ParseError(f"x{idx} exceeds nvars={nvars}", line, col)
        exps[idx - 1] = exps.get(idx - 1, 0) + exp
        pos += len(piece) + 1
    return exps


def parse_ideal(text: str, nvars: int | None = None) -> MonomialIdeal:
    """Parse an ideal from JSON or from monomial strings.

    Monomials are separated by newlines or commas. Without ``nvars`` the
    ambient dimension is the largest variable index that occurs. A leading
    ``-`` before an exponent is rejected by the grammar, so negative
    exponents surface as malformed factors.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        I = ideal_from_dict(doc)
        if nvars is not None and nvars != I.nvars:
            raise ParseError(f"document has nvars={I.nvars}, expected {nvars}")
        return I

    parsed: list[dict[int, int]] = []
    for lineno, line in enumerate(text.splitlines() or [""], start=1):
        col = 1
        for token in line.split(","):
            if token.strip() and not token.strip().startswith("#"):
                parsed.append(parse_monomial(token, nvars, lineno, col))
            col += len(token) + 1
    if nvars is None:
        nvars = max((i + 1 for e in parsed for i in e), default=1)
    gens = []
    for e in parsed:
        v = [0] * nvars
        for i, a in e.items():
            v[i] = a
        gens.append(v)
    return minimalize(gens, nvars)


def parse_monomial_list(text: str, nvars: int | None = None) -> tuple[list[Monomial], int]:
    """Like :func:`parse_ideal` but keeps the given order and duplicates."""
    parsed = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        col = 1
        for token in line.split(","):
            if token.strip():
                parsed.append(parse_monomial(token, nvars, lineno, col))
            col += len(token) + 1
    if nvars is None:
        nvars = max((i + 1 for e in parsed for i in e), default=1)
    out = []
    for e in parsed:
        v = [0] * nvars
        for i, a in e.items():
            v[i] = a
        out.append(tuple(v))
    return out, nvars


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in re.split(r"[,\s]+", text.strip()) if t]
    except ValueError:
        raise ParseError(f"expected a comma separated list of integers, got {text!r}") from None


def parse_graph(text: str, n: int | None = None):
    """Parse a graph file (``n <count>`` header, then ``i j`` lines) or an
    inline edge list such as ``1-2,2-3``. Vertices are 1-based on input."""
    from .graphs import Graph

    edges = []
    header_n = None
    if "-" in text and "\n" not in text.strip():
        for k, tok in enumerate(t for t in text.split(",") if t.strip()):
            parts = tok.split("-")
            if len(parts) != 2:
                raise ParseError(f"malformed edge {tok.strip()!r}", 1, k + 1)
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise ParseError(f"malformed edge {tok.strip()!r}", 1, k + 1) from None
    else:
        for lineno, line in enumerate(text.splitlines(), start=1):
            words = line.split("#", 1)[0].split()
            if not words:
                continue
            if words[0] == "n":
                if len(words) != 2 or not words[1].isdigit():
                    raise ParseError("header must read 'n <count>'", lineno, 1)
                header_n = int(words[1])
                continue
            if len(words) != 2:
                raise ParseError("edge lines must hold two vertex labels", lineno, 1)
            try:
                edges.append((int(words[0]), int(words[1])))
            except ValueError:
                raise ParseError("vertex labels must be integers", lineno, 1) from None
    if n is None:
        n = header_n
    if n is None:
        n = max((max(e) for e in edges), default=0)
    if n < 1:
        raise ParseError("graph needs at least one vertex")
    for i, j in edges:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"edge {i} {j} out of range for n={n}")
        if i == j:
            raise ParseError(f"loop at vertex {i}")
    return Graph.from_edges(n, [(i - 1, j - 1) for i, j in edges])


def render_graph(G) -> str:
    lines = [f"n {G.n}"]
    lines += [f"{i + 1} {j + 1}" for i, j in sorted(G.edges)]
    return "\n".join(lines) + "\n"

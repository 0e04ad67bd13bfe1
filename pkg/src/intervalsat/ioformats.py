"""Parsers and emitters for the on-disk formats.

Inputs tolerate LF or CRLF and reject trailing garbage; outputs are UTF-8
with LF line ends. DIMACS cnf clauses default to weight 1; the wcnf
variant prefixes each clause with a positive integer weight (no hard-top
convention, every clause is soft).
"""
from __future__ import annotations

from typing import Optional

from .errors import (
    ClauseCountMismatch,
    DuplicateElement,
    LiteralOutOfRange,
    MalformedHeader,
    MissingElement,
    MissingLine,
    NotAPermutation,
    ParseError,
    UnknownToken,
    ZeroWeight,
)
from .formula import (
    ClsElem,
    Element,
    Formula,
    MixedOrdering,
    SideOrders,
    VarElem,
    build_formula,
)


def _body_tokens(lines: list[str]) -> list[str]:
    tokens: list[str] = []
    for line in lines:
        if line.startswith("c"):
            continue
        tokens.extend(line.split())
    return tokens


def parse_dimacs(text: str) -> Formula:
    """Parse DIMACS cnf or wcnf text into a Formula."""
    lines = [l.strip() for l in text.splitlines()]
    header: Optional[str] = None
    body: list[str] = []
    for line in lines:
        if not line or line.startswith("c"):
            continue
        if header is None:
            header = line
        else:
            body.append(line)
    if header is None:
        raise MalformedHeader("no problem line found")
    parts = header.split()
    if len(parts) != 4 or parts[0] != "p" or parts[1] not in ("cnf", "wcnf"):
        raise MalformedHeader(f"bad problem line: {header!r}")
    try:
        n, m = int(parts[2]), int(parts[3])
    except ValueError:
        raise MalformedHeader(f"bad counts in problem line: {header!r}") from None
    if n < 0 or m < 0:
        raise MalformedHeader(f"negative counts in problem line: {header!r}")
    weighted = parts[1] == "wcnf"

    tokens = _body_tokens(body)
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"non-integer token in clause data: {exc}") from None

    clause_lits: list[list[int]] = []
    weights: list[int] = []
    pos = 0
    while pos < len(values):
        if weighted:
            w = values[pos]
            pos += 1
            if w == 0:
                raise ZeroWeight(f"clause {len(clause_lits) + 1} has weight 0")
            if w < 0:
                raise ParseError(f"clause {len(clause_lits) + 1} has negative weight")
            weights.append(w)
        lits = []
        terminated = False
        while pos < len(values):
            v = values[pos]
            pos += 1
            if v == 0:
                terminated = True
                break
            if abs(v) > n:
                raise LiteralOutOfRange(
                    f"literal {v} outside variables 1..{n}")
            lits.append(v)
        if not terminated:
            raise ParseError("clause data ends without terminating 0")
        clause_lits.append(lits)
    if len(clause_lits) != m:
        raise ClauseCountMismatch(
            f"header declares {m} clauses, found {len(clause_lits)}")
    return build_formula(n, clause_lits, weights if weighted else None)


def emit_dimacs(formula: Formula) -> str:
    """DIMACS text for the formula; wcnf when any weight differs from 1."""
    weighted = any(c.weight != 1 for c in formula.clauses)
    kind = "wcnf" if weighted else "cnf"
    out = [f"p {kind} {formula.n} {formula.m}"]
    for c in formula.clauses:
        lits = " ".join(str(l.to_int()) for l in sorted(c.literals))
        prefix = f"{c.weight} " if weighted else ""
        out.append(f"{prefix}{lits} 0" if lits else f"{prefix}0")
    return "\n".join(out) + "\n"


def _parse_permutation(tokens: list[str], count: int, what: str) -> tuple[int, ...]:
    try:
        ids = [int(t) for t in tokens]
    except ValueError:
        raise NotAPermutation(f"non-integer in {what} order") from None
    if sorted(ids) != list(range(1, count + 1)):
        raise NotAPermutation(f"{what} order is not a permutation of 1..{count}")
    return tuple(ids)


def parse_orders(text: str, formula: Formula) -> SideOrders:
    """Parse side orders: a `v ...` line then a `c ...` line."""
    lines = [l.strip() for l in text.splitlines() if l.strip()]
    if len(lines) < 2:
        raise MissingLine("expected a 'v' line and a 'c' line")
    if len(lines) > 2:
        raise ParseError("unexpected extra lines in orders file")
    vparts = lines[0].split()
    cparts = lines[1].split()
    if not vparts or vparts[0] != "v":
        raise MissingLine("first line must start with 'v'")
    if not cparts or cparts[0] != "c":
        raise MissingLine("second line must start with 'c'")
    return SideOrders(_parse_permutation(vparts[1:], formula.n, "variable"),
                      _parse_permutation(cparts[1:], formula.m, "clause"))


def emit_orders(so: SideOrders) -> str:
    vline = " ".join(["v"] + [str(v) for v in so.var_order])
    cline = " ".join(["c"] + [str(c) for c in so.cla_order])
    return f"{vline}\n{cline}\n"


def element_token(e: Element) -> str:
    return f"x{e.var}" if isinstance(e, VarElem) else f"c{e.cls}"


def parse_mixed_ordering(text: str, formula: Formula) -> MixedOrdering:
    """Parse whitespace-separated x<i>/c<j> tokens into a MixedOrdering."""
    elements: list[Element] = []
    seen: set[Element] = set()
    for token in text.split():
        kind, rest = token[:1], token[1:]
        if kind not in ("x", "c") or not rest.isdigit():
            raise UnknownToken(f"bad token {token!r}")
        ident = int(rest)
        if kind == "x":
            if not 1 <= ident <= formula.n:
                raise UnknownToken(f"{token!r}: no such variable")
            e: Element = VarElem(ident)
        else:
            if not 1 <= ident <= formula.m:
                raise UnknownToken(f"{token!r}: no such clause")
            e = ClsElem(ident)
        if e in seen:
            raise DuplicateElement(f"{token!r} listed twice")
        seen.add(e)
        elements.append(e)
    if len(elements) != formula.n + formula.m:
        raise MissingElement(
            f"{len(elements)} elements listed, expected {formula.n + formula.m}")
    return MixedOrdering(tuple(elements))


def emit_mixed_ordering(pi: MixedOrdering) -> str:
    return " ".join(element_token(e) for e in pi.elements) + "\n"

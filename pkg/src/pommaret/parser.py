"""Reader for ideal files.

Format::

    # comment
    ring: x, y, z        # variable names, x_1 first (x_1 is the smallest variable)
    char: 0              # optional, 0 or a prime
    ideal:
    z^2 - x*y
    3/2*x*z

Products need an explicit ``*``; ``^`` takes a non-negative integer exponent;
``/`` may only divide by a nonzero constant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .polynomial import Polynomial
from .ring import Ring


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class IdealFile:
    ring: Ring
    generators: tuple[Polynomial, ...]

    @property
    def names(self) -> tuple[str, ...]:
        return self.ring.names


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")


class _Expr:
    def __init__(self, text: str, line: int, ring: Ring, col0: int):
        self.ring = ring
        self.line = line
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            kind = "num" if m.group(1) else "name" if m.group(2) else "op"
            self.tokens.append((kind, m.group(m.lastindex), col0 + m.start(m.lastindex) + 1))
            pos = m.end()
        self.i = 0
        self.end_col = col0 + len(text.rstrip()) + 1
        self.index = {v: k for k, v in enumerate(ring.names, start=1)}

    def error(self, message: str, col: int | None = None):
        if col is None:
            col = self.tokens[self.i][2] if self.i < len(self.tokens) else self.end_col
        raise ParseError(message, self.line, col)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, self.end_col)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            self.error("empty expression")
        p = self.sum()
        if self.i < len(self.tokens):
            self.error(f"unexpected {self.peek()[1]!r}")
        return p

    def sum(self) -> Polynomial:
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        p = self.product()
        if sign < 0:
            p = -p
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.product()
            p = p + q if op == "+" else p - q
        return p

    def product(self) -> Polynomial:
        p = self.power()
        while self.peek()[1] in ("*", "/"):
            _, op, col = self.take()
            q = self.power()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or not q:
                    self.error("division is only allowed by a nonzero constant", col)
                p = p.scale(self.ring.inv(q.coefficient((0,) * self.ring.n)))
        return p

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, val, col = self.take()
            if kind != "num":
                self.error("exponent must be a non-negative integer", col)
            base = base ** int(val)
        return base

    def atom(self) -> Polynomial:
        kind, val, col = self.take()
        R = self.ring
        if kind == "num":
            return Polynomial.constant(R, int(val))
        if kind == "name":
            if val not in self.index:
                self.error(f"undeclared variable {val!r}", col)
            return Polynomial.variable(R, self.index[val])
        if val == "(":
            p = self.sum()
            if self.take()[1] != ")":
                self.i -= 1
                self.error("expected ')'")
            return p
        if val == "-":
            return -self.power()
        self.i -= 1
        self.error("expected a number, variable or '('" if val is not None else "unexpected end of expression")


def _strip_comment(line: str) -> str:
    k = line.find("#")
    return line if k < 0 else line[:k]


def parse_polynomial(text: str, ring: Ring, line: int = 1, column: int = 1) -> Polynomial:
    try:
        return _Expr(text, line, ring, column - 1).parse()
    except OverflowError as exc:
        raise ParseError(str(exc), line, column) from None


def parse_ideal_file(text: str, char: int | None = None, require_homogeneous: bool = True) -> IdealFile:
    """Parse an ideal file; ``char`` overrides the file's ``char:`` line."""
    names = None
    characteristic = 0
    ring = None
    gens: list[Polynomial] = []
    in_ideal = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        stripped = line.strip()
        col = line.index(stripped[0]) + 1
        if not in_ideal:
            key, sep, rest = stripped.partition(":")
            key = key.strip().lower()
            if not sep or key not in ("ring", "char", "ideal"):
                raise ParseError("expected 'ring:', 'char:' or 'ideal:'", lineno, col)
            if key == "ring":
                names = tuple(v.strip() for v in rest.split(","))
                for v in names:
                    if not _NAME.match(v):
                        raise ParseError(f"invalid variable name {v!r}", lineno, col)
                if len(set(names)) != len(names):
                    raise ParseError("duplicate variable name", lineno, col)
            elif key == "char":
                try:
                    characteristic = int(rest.strip())
                except ValueError:
                    raise ParseError("characteristic must be an integer", lineno, col) from None
            else:
                if names is None:
                    raise ParseError("'ideal:' before 'ring:'", lineno, col)
                if rest.strip():
                    raise ParseError("generators start on the line after 'ideal:'", lineno, col)
                try:
                    ring = Ring(names, char if char is not None else characteristic)
                except ValueError as exc:
                    raise ParseError(str(exc), lineno, col) from None
                in_ideal = True
            continue
        p = parse_polynomial(line, ring, lineno, 1)
        if not p:
            raise ParseError("generator is the zero polynomial", lineno, col)
        if require_homogeneous and not p.is_homogeneous():
            raise ParseError("generator is not homogeneous", lineno, col)
        gens.append(p)
    if ring is None:
        raise ParseError("missing 'ideal:' section", max(1, len(text.splitlines())))
    if not gens:
        raise ParseError("the ideal has no generators", max(1, len(text.splitlines())))
    return IdealFile(ring, tuple(gens))


def format_ideal_file(ring: Ring, generators) -> str:
    lines = [f"ring: {', '.join(ring.names)}"]
    if ring.characteristic:
        lines.append(f"char: {ring.characteristic}")
    lines.append("ideal:")
    lines.extend(g.to_string() for g in generators)
    return "\n".join(lines) + "\n"

"""Ket notation for states split between Alice and Bob.

Grammar (whitespace is ignored between tokens)::

    expr    := sum ;
    sum     := ["+"|"-"] product (("+"|"-") product)* ;
    product := coeff? factor+ ;
    factor  := (ket | "(" sum ")") ("^" integer)? ;
    coeff   := number | "sqrt(" number ")" | number "*" "sqrt(" number ")" ;
    ket     := "|" digits "," digits ">" ;
    number  := decimal literal, optionally suffixed with "j" (imaginary) ;

Inside a ket, digits are per-mode occupations (0-9), Alice's before the
comma and Bob's after it. Adjacent factors are composed on fresh modes, so
``(|0,1>+|1,0>)(|0,1>+|1,0>)`` is a two-mode-per-side state. ``^k`` composes
``k`` fresh copies of the factor it follows.
"""

from __future__ import annotations

import math
import re
from typing import List, Tuple

from .errors import ArityMismatch, StateSyntaxError, TooLarge
from .fock import FockState, ModePartition, Statistics, compose, make_state

MAX_TERMS = 10**6
MAX_MODES = 4096
MAX_DEPTH = 64

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?j?", re.ASCII)
_INTEGER = re.compile(r"\d+", re.ASCII)

Parsed = Tuple[FockState, ModePartition]


class _Parser:
    def __init__(self, text: str, stats: Statistics):
        self.text = text
        self.stats = stats
        self.pos = 0
        self.depth = 0

    def error(self, message: str, pos: "int | None" = None) -> StateSyntaxError:
        return StateSyntaxError(message, self.pos if pos is None else pos, self.text)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def parse(self) -> Parsed:
        if not self.text.strip():
            raise self.error("empty expression", 0)
        result = self.sum()
        if self.peek():
            raise self.error(f"unexpected {self.text[self.pos]!r}")
        return result

    def sum(self) -> Parsed:
        sign = 1.0
        if self.peek() in ("+", "-"):
            sign = -1.0 if self.text[self.pos] == "-" else 1.0
            self.pos += 1
        start = self.pos
        state, part = self.product()
        state = state.scaled(sign) if sign < 0 else state
        while self.peek() in ("+", "-"):
            sign = -1.0 if self.text[self.pos] == "-" else 1.0
            self.pos += 1
            at = self.pos
            rhs, rpart = self.product()
            if rpart != part:
                raise ArityMismatch(
                    f"term has {rpart.alice_modes},{rpart.bob_modes} modes but the sum started "
                    f"with {part.alice_modes},{part.bob_modes} (first term at offset {start})",
                    at,
                    self.text,
                )
            state = state + (rhs.scaled(sign) if sign < 0 else rhs)
        return state, part

    def product(self) -> Parsed:
        coeff = self.coeff()
        if self.peek() not in ("|", "("):
            raise self.error("expected a ket or '('")
        acc = self.factor()
        while self.peek() in ("|", "("):
            nxt = self.factor()
            acc = self._compose(acc, nxt)
        if coeff != 1:
            acc = (acc[0].scaled(coeff), acc[1])
        return acc

    def _compose(self, a: Parsed, b: Parsed) -> Parsed:
        if len(a[0]) * len(b[0]) > MAX_TERMS:
            raise TooLarge(f"composite would exceed {MAX_TERMS} terms")
        if a[1].mode_count + b[1].mode_count > MAX_MODES:
            raise TooLarge(f"composite would exceed {MAX_MODES} modes")
        return compose(a[0], b[0], a[1], b[1])

    def factor(self) -> Parsed:
        if self.peek() == "|":
            base = self.ket()
        else:
            self.expect("(")
            self.depth += 1
            if self.depth > MAX_DEPTH:
                raise self.error(f"parentheses nested deeper than {MAX_DEPTH}")
            base = self.sum()
            self.expect(")")
            self.depth -= 1
        if self.peek() != "^":
            return base
        self.pos += 1
        self.skip()
        at = self.pos
        m = _INTEGER.match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer exponent")
        self.pos = m.end()
        power = int(m.group())
        if power < 1:
            raise self.error("exponent must be at least 1", at)
        if base[1].mode_count * power > MAX_MODES or power * math.log(max(len(base[0]), 1)) > math.log(MAX_TERMS):
            raise TooLarge(f"tensor power {power} is too large")
        out = base
        for _ in range(power - 1):
            out = self._compose(out, base)
        return out

    def ket(self) -> Parsed:
        self.expect("|")
        alice = self.digits()
        self.expect(",")
        bob = self.digits()
        self.expect(">")
        occ = alice + bob
        state = make_state(self.stats, len(occ), [(occ, 1.0)])
        return state, ModePartition(len(alice), len(bob))

    def digits(self) -> List[int]:
        out = []
        while self.peek().isdigit() and self.peek().isascii():
            out.append(int(self.text[self.pos]))
            self.pos += 1
        if not out:
            raise self.error("expected an occupation digit")
        return out

    def number(self, allow_imag: bool = True) -> complex:
        self.skip()
        at = self.pos
        m = _NUMBER.match(self.text, self.pos)
        if not m:
            raise self.error("expected a number")
        lit = m.group()
        if lit.endswith("j") and not allow_imag:
            raise self.error("imaginary number not allowed here", at)
        self.pos = m.end()
        value = complex(lit) if lit.endswith("j") else float(lit)
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise self.error("number out of range", at)
        return value

    def sqrt(self) -> float:
        self.pos += len("sqrt")
        self.expect("(")
        value = math.sqrt(self.number(allow_imag=False).real)
        self.expect(")")
        return value

    def coeff(self) -> complex:
        ch = self.peek()
        if self.text.startswith("sqrt", self.pos):
            return self.sqrt()
        if ch and ((ch.isascii() and ch.isdigit()) or ch == "."):
            value = self.number()
            if self.peek() == "*":
                self.pos += 1
                self.skip()
                if not self.text.startswith("sqrt", self.pos):
                    raise self.error("expected 'sqrt(' after '*'")
                value *= self.sqrt()
            return value
        return 1.0


def parse_state(text: str, stats: "Statistics | str" = Statistics.BOSON) -> Parsed:
    """Parse ket notation into a state and its Alice/Bob mode partition.

    Raises :class:`StateSyntaxError` (with a character offset) for malformed
    text; other :class:`~fockent.errors.FockError` subclasses signal
    well-formed text that describes an invalid state.
    """
    return _Parser(text, Statistics.parse(stats)).parse()


def _format_real(x: float) -> str:
    return repr(float(x))


def format_state(s: FockState, p: ModePartition) -> str:
    """Canonical text, terms in lexicographic order.

    Complex amplitudes are written as a real term followed by an imaginary
    term on the same ket; parsing sums them back together.
    """
    if s.is_zero:
        return "0"
    k = p.alice_modes
    parts: List[str] = []
    for occ, amp in s.items():
        ket = "|" + "".join(map(str, occ[:k])) + "," + "".join(map(str, occ[k:])) + ">"
        pieces = []
        if amp.real != 0.0 or amp.imag == 0.0:
            pieces.append((amp.real, ""))
        if amp.imag != 0.0:
            pieces.append((amp.imag, "j"))
        for value, suffix in pieces:
            sign = "-" if value < 0 else "+"
            mag = abs(value)
            coeff = "" if (mag == 1.0 and not suffix) else _format_real(mag) + suffix
            parts.append(sign + coeff + ket)
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text

"""A Turing-machine tape stored as a generating function.

Cell ``n`` is the coefficient of ``x**n``; blank cells are zero terms.
Reading evaluates the n-th formal derivative at 0 and divides by n!,
writing subtracts the old monomial and adds the new one, and moving the head
left of cell 0 multiplies the whole tape by ``x`` first so exponents never go
negative.  :func:`run_tm` steps a machine on this tape and on a plain list in
lockstep, checking the two agree after every step.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import InvalidLeftShift, StepLimitExceeded, SymbolOutOfAlphabet
from .genfunc import SparsePoly, derivative_read


@dataclass(frozen=True)
class PolyTape:
    poly: SparsePoly = field(default_factory=SparsePoly)
    k: int = 2
    head_offset: int = 0  # cumulative right shift, bounds legal left shifts

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("alphabet needs at least two symbols")
        for e, c in self.poly.terms.items():
            if not 0 <= c < self.k:
                raise SymbolOutOfAlphabet(f"cell {e} holds {c}, alphabet size {self.k}")
            if e < 0:
                raise InvalidLeftShift(f"tape has negative exponent {e}")

    @classmethod
    def from_cells(cls, cells, k: int = 2) -> "PolyTape":
        return cls(SparsePoly({i: s for i, s in enumerate(cells) if s}), k)

    def cells(self) -> list[int]:
        """Dense view up to the last non-blank cell."""
        if not self.poly.terms:
            return []
        out = [0] * (self.poly.degree + 1)
        for e, c in self.poly.terms.items():
            out[e] = c
        return out


def read_cell(tape: PolyTape, n: int, via: str = "derivative") -> int:
    if n < 0:
        raise ValueError("cell index must be non-negative")
    if via == "lookup":
        return tape.poly[n]
    if via == "derivative":
        return derivative_read(tape.poly, n)
    raise ValueError(f"unknown read method {via!r}")


def shift_right(tape: PolyTape, t: int) -> PolyTape:
    if t < 0:
        raise ValueError("shift amount must be non-negative")
    return PolyTape(tape.poly.shift(t), tape.k, tape.head_offset + t)


def shift_left(tape: PolyTape, t: int) -> PolyTape:
    if t < 0:
        raise ValueError("shift amount must be non-negative")
    if t > tape.head_offset:
        raise InvalidLeftShift(f"left shift {t} exceeds accumulated right shift {tape.head_offset}")
    if tape.poly.terms and tape.poly.min_exponent < t:
        raise InvalidLeftShift(f"left shift {t} would push cell {tape.poly.min_exponent} below 0")
    return PolyTape(tape.poly.shift(-t), tape.k, tape.head_offset - t)


def write_cell(tape: PolyTape, i: int, symbol: int) -> PolyTape:
    """F - a_i x^i + new x^i, with a_i read off the tape first."""
    if not 0 <= symbol < tape.k:
        raise SymbolOutOfAlphabet(f"symbol {symbol} outside alphabet of size {tape.k}")
    old = read_cell(tape, i)
    poly = tape.poly - SparsePoly.monomial(old, i) + SparsePoly.monomial(symbol, i)
    return PolyTape(poly, tape.k, tape.head_offset)


# -- machines -----------------------------------------------------------------

@dataclass(frozen=True)
class TMDescription:
    states: tuple
    k: int
    transitions: dict  # (state, symbol) -> (state', symbol', "L" | "R")
    start: str
    accept: str
    reject: str = "reject"
    name: str = ""

    def __post_init__(self):
        for (q, s), (q2, s2, move) in self.transitions.items():
            if move not in ("L", "R"):
                raise ValueError(f"bad move {move!r} in transition ({q}, {s})")
            if not (0 <= s < self.k and 0 <= s2 < self.k):
                raise SymbolOutOfAlphabet(f"transition ({q}, {s}) uses symbol outside 0..{self.k - 1}")

    @property
    def halting(self) -> tuple:
        return (self.accept, self.reject)

    @classmethod
    def from_dict(cls, d: dict) -> "TMDescription":
        trans = {}
        for q, s, q2, s2, move in d["transitions"]:
            trans[(q, int(s))] = (q2, int(s2), move)
        return cls(tuple(d["states"]), int(d["k"]), trans, d["start"], d["accept"],
                   d.get("reject", "reject"), d.get("name", ""))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "states": list(self.states),
            "k": self.k,
            "start": self.start,
            "accept": self.accept,
            "reject": self.reject,
            "transitions": [[q, s, q2, s2, m] for (q, s), (q2, s2, m) in self.transitions.items()],
        }

    @classmethod
    def load(cls, path) -> "TMDescription":
        with open(path) as f:
            return cls.from_dict(json.load(f))


@dataclass(frozen=True)
class Step:
    index: int
    state: str
    head: int
    tape: PolyTape


@dataclass
class TMRun:
    status: str  # "accept", "reject" or "running" when cut off
    tape: PolyTape
    head: int
    steps: int
    trace: list

    def output(self) -> list[int]:
        return self.tape.cells()


class LockstepMismatch(AssertionError):
    pass


class _ArrayTape:
    """Reference tape: growable list with its own head, extended left by prepending."""

    def __init__(self, cells):
        self.cells = list(cells) or [0]
        self.head = 0

    def read(self):
        return self.cells[self.head] if self.head < len(self.cells) else 0

    def write(self, s):
        while self.head >= len(self.cells):
            self.cells.append(0)
        self.cells[self.head] = s

    def move(self, direction):
        if direction == "R":
            self.head += 1
        elif self.head == 0:
            self.cells.insert(0, 0)
        else:
            self.head -= 1

    def trimmed(self):
        c = list(self.cells)
        while c and c[-1] == 0:
            c.pop()
        return c


def run_tm(m: TMDescription, tape_input, max_steps: int = 10_000) -> TMRun:
    """Run ``m`` on both tapes; raises :class:`StepLimitExceeded` carrying the partial run."""
    tape = PolyTape.from_cells(tape_input, m.k)
    ref = _ArrayTape(tape_input)
    state, head = m.start, 0
    trace = [Step(0, state, head, tape)]
    steps = 0
    while state not in m.halting:
        if steps >= max_steps:
            run = TMRun("running", tape, head, steps, trace)
            raise StepLimitExceeded(f"{m.name or 'machine'} did not halt in {max_steps} steps", run)
        sym = read_cell(tape, head)
        ref_sym = ref.read()
        if sym != ref_sym:
            raise LockstepMismatch(f"step {steps}: read {sym} from polytape, {ref_sym} from array")
        try:
            state, new_sym, move = m.transitions[(state, sym)]
        except KeyError:
            raise KeyError(f"no transition for ({state}, {sym})") from None
        tape = write_cell(tape, head, new_sym)
        ref.write(new_sym)
        ref.move(move)
        if move == "R":
            head += 1
        elif head == 0:
            # make room on the left: every cell moves one exponent up
            tape = shift_right(tape, 1)
        else:
            head -= 1
        steps += 1
        if tape.cells() != ref.trimmed() or head != ref.head:
            raise LockstepMismatch(
                f"step {steps}: polytape {tape.cells()}@{head} != array {ref.trimmed()}@{ref.head}")
        trace.append(Step(steps, state, head, tape))
    return TMRun("accept" if state == m.accept else "reject", tape, head, steps, trace)


# Sample machines over {0 = blank, 1, ...}.

def unary_incrementer() -> TMDescription:
    """Appends one stroke to a block of 1s."""
    return TMDescription(
        ("scan", "done"), 2,
        {("scan", 1): ("scan", 1, "R"), ("scan", 0): ("done", 1, "R")},
        "scan", "done", name="unary-incrementer",
    )


def binary_successor() -> TMDescription:
    """Adds one to a binary number written most significant digit first.

    Symbols: 0 blank, 1 digit zero, 2 digit one.  Runs to the right end,
    then carries leftward; a carry out of the leftmost digit grows the tape
    on the left.
    """
    return TMDescription(
        ("right", "carry", "done"), 3,
        {
            ("right", 1): ("right", 1, "R"),
            ("right", 2): ("right", 2, "R"),
            ("right", 0): ("carry", 0, "L"),
            ("carry", 2): ("carry", 1, "L"),
            ("carry", 1): ("done", 2, "R"),
            ("carry", 0): ("done", 2, "R"),
        },
        "right", "done", name="binary-successor",
    )


def sweep_scanner() -> TMDescription:
    """Two-state mirror sweep: right across the word, then back left complementing it."""
    return TMDescription(
        ("out", "back", "done"), 3,
        {
            ("out", 1): ("out", 1, "R"),
            ("out", 2): ("out", 2, "R"),
            ("out", 0): ("back", 0, "L"),
            ("back", 1): ("back", 2, "L"),
            ("back", 2): ("back", 1, "L"),
            ("back", 0): ("done", 0, "R"),
        },
        "out", "done", name="sweep-scanner",
    )


def immediate_accept(k: int = 2) -> TMDescription:
    return TMDescription(
        ("start", "yes"), k,
        {("start", s): ("yes", s, "R") for s in range(k)},
        "start", "yes", name="immediate-accept",
    )


def encode_binary(bits: str) -> list[int]:
    """'011' -> digit symbols for :func:`binary_successor`."""
    return [2 if ch == "1" else 1 for ch in bits]


def decode_binary(cells) -> str:
    return "".join("1" if c == 2 else "0" for c in cells if c)

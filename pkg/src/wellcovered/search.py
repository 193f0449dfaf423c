"""Predicate expressions for corpus search.

Grammar::

    expr  := term ('&' term)*
    term  := '!'* atom
    atom  := well_covered | alpha_critical | triangle_free
           | locally_triangle_free | connected
           | 'wp' '>=' INT | 'alpha' '=' INT | 'mindeg' '>=' INT
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .criticality import is_alpha_critical
from .graph import Graph, is_locally_triangle_free, is_triangle_free
from .independence import alpha
from .wp import is_well_covered, is_wp_recursive

_TOKEN = re.compile(r"\s*(?:(?P<op>&|!|>=|=)|(?P<int>\d+)|(?P<name>[A-Za-z_]+))")

_FLAGS: dict[str, Callable[[Graph], bool]] = {
    "well_covered": is_well_covered,
    "alpha_critical": lambda G: is_alpha_critical(G).alpha_critical,
    "triangle_free": is_triangle_free,
    "locally_triangle_free": is_locally_triangle_free,
    "connected": lambda G: G.is_connected(),
}

_COMPARISONS = {"wp": ">=", "alpha": "=", "mindeg": ">="}


class PredicateSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


@dataclass(frozen=True)
class Atom:
    name: str
    value: int | None = None
    negated: bool = False

    def __call__(self, G: Graph) -> bool:
        if self.name in _FLAGS:
            result = _FLAGS[self.name](G)
        elif self.name == "wp":
            result = self.value <= 0 or is_wp_recursive(G, self.value).member
        elif self.name == "alpha":
            result = alpha(G) == self.value
        else:
            result = G.min_degree() >= self.value
        return result != self.negated


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PredicateSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        yield kind, m.group(kind), m.start(kind)
        pos = m.end()
    yield "end", "", len(text)


def parse_predicate(text: str) -> list[Atom]:
    toks = list(_tokens(text))
    i = 0
    atoms: list[Atom] = []

    def expect(kind, value=None):
        nonlocal i
        k, v, pos = toks[i]
        if k != kind or (value is not None and v != value):
            want = value or kind
            raise PredicateSyntaxError(f"expected {want!r}, found {v or 'end of input'!r}", pos)
        i += 1
        return v

    while True:
        negated = False
        while toks[i][:2] == ("op", "!"):
            negated = not negated
            i += 1
        k, name, pos = toks[i]
        if k != "name":
            raise PredicateSyntaxError(f"expected a predicate name, found {name or 'end of input'!r}", pos)
        i += 1
        if name in _FLAGS:
            atoms.append(Atom(name, None, negated))
        elif name in _COMPARISONS:
            expect("op", _COMPARISONS[name])
            atoms.append(Atom(name, int(expect("int")), negated))
        else:
            raise PredicateSyntaxError(f"unknown predicate {name!r}", pos)
        k, v, pos = toks[i]
        if k == "end":
            return atoms
        expect("op", "&")


def evaluate(atoms: list[Atom], G: Graph) -> bool:
    return all(atom(G) for atom in atoms)

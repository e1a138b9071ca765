"""Kohnert polynomials: the generating function of KD(D0) by row counts."""

from __future__ import annotations

from collections import Counter
from typing import Optional

from .closure import kd_closure
from .diagram import Diagram

Exponent = tuple[int, ...]


def monomial_of(d: Diagram) -> Exponent:
    """Row-count vector with trailing zeros removed."""
    return d.row_counts()


class Polynomial:
    def __init__(self, terms=None):
        self._terms: dict[Exponent, int] = {}
        for exp, c in dict(terms or {}).items():
            exp = _trim(tuple(exp))
            if c:
                self._terms[exp] = self._terms.get(exp, 0) + c
        self._terms = {e: c for e, c in self._terms.items() if c}

    def terms(self) -> list[tuple[Exponent, int]]:
        """``(exponent, coefficient)`` pairs in lexicographic exponent order."""
        return sorted(self._terms.items())

    def coefficient(self, exp) -> int:
        return self._terms.get(_trim(tuple(exp)), 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_render_term(e, c) for e, c in self.terms())

    def __repr__(self) -> str:
        return f"Polynomial({dict(self.terms())!r})"

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coefficient": c} for e, c in self.terms()]


def _trim(exp: Exponent) -> Exponent:
    end = len(exp)
    while end and exp[end - 1] == 0:
        end -= 1
    return exp[:end]


def _render_term(exp: Exponent, c: int) -> str:
    vars_ = " ".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exp, 1) if e)
    if not vars_:
        return str(c)
    return vars_ if c == 1 else f"{c} * {vars_}"


def kohnert_polynomial(d0: Diagram, node_cap: Optional[int] = None) -> Polynomial:
    return Polynomial(Counter(monomial_of(d) for d in kd_closure(d0, node_cap=node_cap).nodes))


def is_multiplicity_free(p: Polynomial) -> bool:
    return all(c == 1 for _, c in p.terms())

"""Worked examples used by the tests, the README and ``effradius plot``."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Case:
    name: str
    expr: str
    degree: int
    center: float = 0.0


SINE = Case("sine", "sin(x)", 11)
NORMAL_PDF = Case("normal_pdf", "exp(-x^2/2)/sqrt(2*pi)", 10)
MIXED = Case("mixed", "sin(3*x)*cos(5*x)*exp(-x) + 3*sin(pi*x)*exp(x/2)", 30)
RATIONAL = Case("rational", "((1/8)*x + (1/2)*x^2) / (1 + (1/8)*x + (1/2)*x^2)", 30)

CASES = {c.name: c for c in (SINE, NORMAL_PDF, MIXED, RATIONAL)}

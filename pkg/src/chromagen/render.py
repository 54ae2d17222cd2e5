"""Deterministic rendering of states, matrices, generating functions, series
tables, and verification reports in text, LaTeX, or JSON.

JSON serializes every coefficient as a decimal integer or rational string
(never a float) so that output round-trips exactly; the *_from_json helpers
perform the inverse.  Term order in JSON is ascending in z, descending in c;
univariate polynomials list [degree, coefficient] pairs in descending degree.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .algebra import PolyC, PolyZC, RatFunc
from .genfunc import GenFunc
from .oracle import VerificationReport
from .states import CanonState
from .transfer import TransferMatrix

FORMATS = ("text", "latex", "json")


# ---------------------------------------------------------------------------
# LaTeX polynomial forms (text forms live on the algebra classes)
# ---------------------------------------------------------------------------

def _coeff_latex(mag: Fraction) -> str:
    if mag.denominator == 1:
        return str(mag.numerator)
    return rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"


def _power_latex(var: str, deg: int) -> str:
    if deg == 1:
        return var
    return f"{var}^{deg}" if deg < 10 else f"{var}^{{{deg}}}"


def _monomial_latex(coeff: Fraction, vars_degs, joined: bool) -> str:
    factors = [_power_latex(v, d) for (v, d) in vars_degs if d > 0]
    mag = abs(coeff)
    if not factors:
        body = _coeff_latex(mag)
    elif mag == 1:
        body = "".join(factors)
    else:
        body = _coeff_latex(mag) + "".join(factors)
    if coeff < 0:
        return "-" + body
    return ("+" if joined else "") + body


def polyc_latex(p: PolyC, var: str = "c") -> str:
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for deg in range(p.degree, -1, -1):
        coeff = p.coefficient(deg)
        if coeff == 0:
            continue
        parts.append(_monomial_latex(coeff, ((var, deg),), bool(parts)))
    return "".join(parts)


def polyzc_latex(p: PolyZC, zvar: str = "z", cvar: str = "c") -> str:
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for dz, q in enumerate(p.z_coefficients()):
        if q.is_zero:
            continue
        nonzero = [(dc, coeff) for dc, coeff in enumerate(q.coefficients) if coeff != 0]
        if dz == 0:
            text = polyc_latex(q, cvar)
            parts.append(text if not parts or text.startswith("-") else "+" + text)
        elif len(nonzero) == 1:
            dc, coeff = nonzero[0]
            parts.append(_monomial_latex(coeff, ((cvar, dc), (zvar, dz)), bool(parts)))
        else:
            joiner = "+" if parts else ""
            parts.append(f"{joiner}({polyc_latex(q, cvar)}){_power_latex(zvar, dz)}")
    return "".join(parts)


def ratfunc_latex(f: RatFunc, zvar: str = "z", cvar: str = "c") -> str:
    num = polyzc_latex(f.numerator, zvar, cvar)
    if f.denominator == PolyZC.one():
        return num
    den = polyzc_latex(f.denominator, zvar, cvar)
    return rf"\frac{{{num}}}{{{den}}}"


# ---------------------------------------------------------------------------
# JSON forms and their inverses
# ---------------------------------------------------------------------------

def polyc_to_json(p: PolyC) -> list:
    """[[degree, coefficient-string], ...] in descending degree."""
    return [[deg, str(p.coefficient(deg))]
            for deg in range(p.degree, -1, -1) if p.coefficient(deg) != 0]


def polyc_from_json(obj) -> PolyC:
    terms = {int(deg): Fraction(coeff) for deg, coeff in obj}
    if not terms:
        return PolyC.zero()
    out = [Fraction(0)] * (max(terms) + 1)
    for deg, coeff in terms.items():
        out[deg] = coeff
    return PolyC(out)


def polyzc_to_json(p: PolyZC) -> list:
    """[[z-degree, c-degree, coefficient-string], ...], z ascending, c descending."""
    terms = sorted(p.items(), key=lambda item: (item[0][0], -item[0][1]))
    return [[dz, dc, str(coeff)] for (dz, dc), coeff in terms]


def polyzc_from_json(obj) -> PolyZC:
    return PolyZC({(int(dz), int(dc)): Fraction(coeff) for dz, dc, coeff in obj})


def ratfunc_to_json(f: RatFunc) -> dict:
    return {"num": polyzc_to_json(f.numerator), "den": polyzc_to_json(f.denominator)}


def ratfunc_from_json(obj) -> RatFunc:
    return RatFunc(polyzc_from_json(obj["num"]), polyzc_from_json(obj["den"]))


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# ---------------------------------------------------------------------------
# State display
# ---------------------------------------------------------------------------

def format_states(states: Sequence[CanonState]) -> list[str]:
    """Digit strings like '121' when every label fits one digit, otherwise
    comma-separated labels."""
    digits = all(label <= 9 for state in states for label in state)
    if digits:
        return ["".join(str(label) for label in state) for state in states]
    return [",".join(str(label) for label in state) for state in states]


# ---------------------------------------------------------------------------
# Top-level rendering
# ---------------------------------------------------------------------------

def render(value, fmt: str = "text", zvar: str = "z", cvar: str = "c") -> str:
    """Render a states list, TransferMatrix, GenFunc/RatFunc, series table
    (list of (n, PolyC) pairs), or VerificationReport."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(value, TransferMatrix):
        return _render_matrix(value, fmt, cvar)
    if isinstance(value, GenFunc):
        return _render_ratfunc(value.value, fmt, zvar, cvar)
    if isinstance(value, RatFunc):
        return _render_ratfunc(value, fmt, zvar, cvar)
    if isinstance(value, VerificationReport):
        return _render_report(value, fmt)
    if isinstance(value, (list, tuple)) and value and isinstance(value[0], tuple) \
            and len(value[0]) == 2 and isinstance(value[0][1], PolyC):
        return _render_series(value, fmt, cvar)
    if isinstance(value, (list, tuple)):
        return _render_states(value, fmt)
    raise TypeError(f"cannot render a {type(value).__name__}")


def _render_states(states: Sequence[CanonState], fmt: str) -> str:
    if fmt == "json":
        return _dumps({"states": [list(state) for state in states]})
    lines = format_states(states)
    if fmt == "latex":
        return "\\begin{array}{c}" + "\\\\".join(lines) + "\\end{array}"
    return "\n".join(lines)


def _render_matrix(tm: TransferMatrix, fmt: str, cvar: str) -> str:
    if fmt == "json":
        return _dumps({
            "states": [list(state) for state in tm.states],
            "entries": [[polyc_to_json(entry) for entry in row] for row in tm.entries],
        })
    labels = format_states(tm.states)
    if fmt == "latex":
        rows = ["&".join(polyc_latex(entry, cvar) for entry in row)
                for row in tm.entries]
        return ("% states: " + " ".join(labels) + "\n"
                + "\\begin{pmatrix}" + "\\\\".join(rows) + "\\end{pmatrix}")
    lines = ["states: " + " ".join(labels)]
    for i, row in enumerate(tm.entries):
        for j, entry in enumerate(row):
            lines.append(f"M[{labels[i]},{labels[j]}] = {entry.to_text(cvar)}")
    return "\n".join(lines)


def _render_ratfunc(f: RatFunc, fmt: str, zvar: str, cvar: str) -> str:
    if fmt == "json":
        return _dumps(ratfunc_to_json(f))
    if fmt == "latex":
        return ratfunc_latex(f, zvar, cvar)
    return f.to_text(zvar, cvar)


def _render_series(rows: Sequence[tuple[int, PolyC]], fmt: str, cvar: str) -> str:
    if fmt == "json":
        return _dumps({"series": [{"n": n, "poly": polyc_to_json(p)} for n, p in rows]})
    if fmt == "latex":
        body = "\\\\".join(f"p_{{{n}}} &= {polyc_latex(p, cvar)}" for n, p in rows)
        return "\\begin{aligned}" + body + "\\end{aligned}"
    return "\n".join(f"p_{n} = {p.to_text(cvar)}" for n, p in rows)


def _render_report(report: VerificationReport, fmt: str) -> str:
    verdict = "PASS" if report.passed else "FAIL"
    if fmt == "json":
        return _dumps({
            "checks": [{"n": check.n, "ok": check.ok} for check in report.checks],
            "pass": report.passed,
        })
    if fmt == "latex":
        rows = [f"n={check.n} & {'OK' if check.ok else 'FAIL'}"
                for check in report.checks]
        rows.append(f"overall & {verdict}")
        return "\\begin{tabular}{ll}" + "\\\\".join(rows) + "\\end{tabular}"
    lines = [f"n={check.n} {'OK' if check.ok else 'FAIL'}" for check in report.checks]
    lines.append(verdict)
    return "\n".join(lines)

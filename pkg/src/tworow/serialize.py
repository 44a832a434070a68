"""Wire formats: JSON for forms, basis vectors and tables, CSV for kernels,
traces and sample summaries.

All rationals travel as decimal strings in lowest terms with positive
denominators, and every writer is deterministic byte for byte: keys are
sorted, entries are sorted, lines end with a single newline.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .forms import SquareFreeForm
from .gz import GzVector
from .markov import SpectralTable, TransitionKernel
from .ygraph import TwoRowTableau


def fraction_to_dict(x: Fraction) -> dict[str, str]:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def fraction_from_dict(obj: dict[str, Any]) -> Fraction:
    num = int(obj["num"])
    den = int(obj["den"])
    if den <= 0:
        raise ValueError(f"denominator must be positive, got {den}")
    return Fraction(num, den)


def form_to_dict(f: SquareFreeForm) -> dict[str, Any]:
    terms = []
    for key, val in f.terms():
        terms.append(
            {
                "vars": list(key),
                "num": str(val.numerator),
                "den": str(val.denominator),
            }
        )
    return {"n": f.n, "k": f.k, "terms": terms}


def form_from_dict(obj: dict[str, Any]) -> SquareFreeForm:
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for term in obj["terms"]:
        key = tuple(int(v) for v in term["vars"])
        if key in coeffs:
            raise ValueError(f"duplicate monomial {key}")
        coeffs[key] = fraction_from_dict(term)
    return SquareFreeForm(int(obj["n"]), int(obj["k"]), coeffs)


def gz_vector_to_dict(vec: GzVector) -> dict[str, Any]:
    return {
        "second_row": list(vec.tableau.second_row),
        "terms": form_to_dict(vec.form)["terms"],
        "norm_sq": fraction_to_dict(vec.norm_sq),
    }


def table_to_dict(table: SpectralTable) -> dict[str, Any]:
    entries = []
    for u, p in table.items():
        entries.append(
            {
                "second_row": list(u.second_row),
                "num": str(p.numerator),
                "den": str(p.denominator),
            }
        )
    return {"level": table.level, "entries": entries}


def table_from_dict(obj: dict[str, Any]) -> SpectralTable:
    level = int(obj["level"])
    probs: dict[TwoRowTableau, Fraction] = {}
    for entry in obj["entries"]:
        u = TwoRowTableau(level, tuple(int(v) for v in entry["second_row"]))
        if u in probs:
            raise ValueError(f"duplicate tableau {u.second_row}")
        probs[u] = fraction_from_dict(entry)
    return SpectralTable(level, probs)


KERNEL_HEADER = "n,k,bit,p_stay_num,p_stay_den,p_up_num,p_up_den"


def kernel_to_csv(kernel: TransitionKernel) -> str:
    lines = [KERNEL_HEADER]
    for n, k, entry in kernel.rows():
        bit = "" if entry.bit is None else str(entry.bit)
        lines.append(
            f"{n},{k},{bit},{entry.p_stay.numerator},{entry.p_stay.denominator},"
            f"{entry.p_up.numerator},{entry.p_up.denominator}"
        )
    return "\n".join(lines) + "\n"


def kernel_to_rows(kernel: TransitionKernel) -> list[dict[str, Any]]:
    rows = []
    for n, k, entry in kernel.rows():
        rows.append(
            {
                "n": n,
                "k": k,
                "bit": entry.bit,
                "p_stay": fraction_to_dict(entry.p_stay),
                "p_up": fraction_to_dict(entry.p_up),
            }
        )
    return rows


TRACE_HEADER = "step,k,j"


def trace_to_csv(paths: list[list[int]]) -> str:
    """Each path is its list of second-row lengths at levels 1, 2, ...; the
    j column is the walk coordinate level - 2k.  Steps restart at 1 for
    every path."""
    lines = [TRACE_HEADER]
    for ks in paths:
        for step, k in enumerate(ks, start=1):
            lines.append(f"{step},{k},{step - 2 * k}")
    return "\n".join(lines) + "\n"


SUMMARY_HEADER = "n,k,trials,observed_up,p_up_num,p_up_den,sigma_ok"


def summary_to_csv(
    rows: list[tuple[int, int, int, int, Fraction, bool]]
) -> str:
    lines = [SUMMARY_HEADER]
    for n, k, trials, ups, p_up, ok in rows:
        lines.append(
            f"{n},{k},{trials},{ups},{p_up.numerator},{p_up.denominator},"
            f"{1 if ok else 0}"
        )
    return "\n".join(lines) + "\n"


def json_text(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"

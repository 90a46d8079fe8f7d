# File: app/services/formatting.py
# Path: hopfbench/app/services/formatting.py

"""
Deterministic rendering of elements, tensors and suite reports.

Terms print by weight, then by basis key, and every printed element
parses back through app.services.parser to an equal value.
"""

import json
from typing import Any, Callable, Dict, List, Optional

from app.algebra.core import LinComb
from app.algebra.hopf_trees import (
    HFElement,
    HKElement,
    TElement,
    forest_label,
    planar_forest_label,
    tree_label,
)
from app.algebra.qsym import NSymElement, QSymElement, SymElement
from app.algebra.words import word_label
from app.models.verification import VerificationSummary

TENSOR_SIGN = "⊗"

LABELS: Dict[str, Callable[[Any], str]] = {
    "qsym": lambda comp: f"M{comp}",
    "nsym": lambda comp: f"S{comp}",
    "word": word_label,
    "t": tree_label,
    "hk": forest_label,
    "hf": planar_forest_label,
    "e": lambda partition: f"e{partition}",
}

def family_of(value: LinComb) -> str:
    if isinstance(value, QSymElement):
        return "qsym"
    if isinstance(value, NSymElement):
        return "nsym"
    if isinstance(value, SymElement):
        return "sym"
    if isinstance(value, TElement):
        return "t"
    if isinstance(value, HKElement):
        return "hk"
    if isinstance(value, HFElement):
        return "hf"
    return "word"

def format_element(value: LinComb, family: Optional[str] = None) -> str:
    family = family or family_of(value)
    if family == "sym":
        return value.format(value.label)
    return value.format(LABELS[family])

def format_tensor(value: LinComb, family: str) -> str:
    """Pairs (a, b) print as 'A⊗B'; `family` names the algebra of both factors (sym means the e basis)"""
    label = LABELS["e" if family == "sym" else family]
    return value.format(lambda pair: f"{label(pair[0])}{TENSOR_SIGN}{label(pair[1])}")

def render_table(headers: List[str], rows: List[List[str]]) -> str:
    """Fixed-width text table, columns sized to their widest cell"""
    widths = [len(header) for header in headers]
    for row in rows:
        for index, cell in enumerate(row):
            widths[index] = max(widths[index], len(cell))
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * width for width in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return "\n".join(lines)

def dump_json(payload: Any) -> str:
    """Stable JSON: sorted keys, two-space indent"""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)

def element_payload(value: LinComb, family: Optional[str] = None) -> Dict[str, Any]:
    family = family or family_of(value)
    label = value.label if family == "sym" else LABELS[family]
    return {
        "family": family,
        "element": format_element(value, family),
        "terms": [{"basis": label(basis), "coefficient": str(coeff)} for basis, coeff in value.sorted_items()],
    }

def tensor_payload(value: LinComb, family: str) -> Dict[str, Any]:
    label = LABELS["e" if family == "sym" else family]
    return {
        "family": f"{family}2",
        "element": format_tensor(value, family),
        "terms": [
            {"left": label(left), "right": label(right), "coefficient": str(coeff)}
            for (left, right), coeff in value.sorted_items()
        ],
    }

def render_summary(summary: VerificationSummary) -> str:
    """The pass/fail table printed by `verify all`"""
    rows = [[suite.name, "PASS" if suite.passed else "FAIL", str(suite.checked)] for suite in summary.suites]
    lines = [render_table(["suite", "result", "checks"], rows)]
    for suite in summary.suites:
        for failure in suite.failures:
            lines.append(f"  {suite.name}: {failure}")
    lines.append(f"overall: {'PASS' if summary.passed else 'FAIL'} (max degree {summary.max_degree})")
    return "\n".join(lines)

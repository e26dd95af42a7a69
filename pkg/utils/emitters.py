"""
Emitters - text, JSON and DOT renderings of CDFAs and quasi-order reports
"""
import json
from collections import OrderedDict
from typing import Any, Dict, List, Optional, Sequence

import graphviz

from models.cdfa import Cdfa
from models.errors import FormatError
from models.fuzzy import FuzzySet
from models.lattice import Lattice
from models.quasi_order import QuasiOrderReport
from utils.relations import distinct_rows


def _provenance_json(lattice: Lattice, entry) -> Any:
    if isinstance(entry, FuzzySet):
        return [lattice.json_value(v) for v in entry]
    return [[lattice.json_value(v) for v in vector] for vector in entry]


def cdfa_to_dict(c: Cdfa) -> Dict[str, Any]:
    """JSON-ready mapping of all CDFA fields; rationals as "p/q" strings"""
    lat = c.lattice
    states = []
    for state in range(c.size):
        entry = OrderedDict()
        entry["id"] = state
        entry["label"] = c.labels[state]
        entry["term"] = lat.json_value(c.term[state])
        entry["next"] = {symbol: c.transitions[state][k] for k, symbol in enumerate(c.alphabet)}
        if c.provenance is not None:
            entry["provenance"] = _provenance_json(lat, c.provenance[state])
        states.append(entry)
    return OrderedDict([
        ("lattice", lat.name),
        ("alphabet", list(c.alphabet)),
        ("initial", c.initial),
        ("states", states),
    ])


def cdfa_from_dict(data: Dict[str, Any]) -> Cdfa:
    """Inverse of cdfa_to_dict (provenance is not restored)"""
    try:
        lat = Lattice.from_name(data["lattice"])
        alphabet = list(data["alphabet"])
        states = sorted(data["states"], key=lambda s: s["id"])
        return Cdfa(lat, alphabet, [s["label"] for s in states],
                    [[s["next"][symbol] for symbol in alphabet] for s in states],
                    data["initial"], [lat.from_json_value(s["term"]) for s in states])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"not a CDFA document: missing or malformed {exc}")


def emit_json(c: Cdfa, report: Optional[Dict[str, Any]] = None) -> str:
    data = cdfa_to_dict(c)
    if report:
        data["report"] = report
    return json.dumps(data, indent=2, ensure_ascii=False)


def load_cdfa_json(text: str) -> Cdfa:
    try:
        return cdfa_from_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.lineno)


def emit_dot(c: Cdfa, name: str = "cdfa") -> str:
    """DOT digraph: start arrow, terminal degree in every node label, merged edge labels"""
    g = graphviz.Digraph(name, graph_attr={"rankdir": "LR"})
    g.node("start", label="", shape="point")
    one = c.lattice.one
    for state in range(c.size):
        term = c.term[state]
        g.node(f"q{state}", label=f"{c.labels[state]}\\n{c.lattice.format_value(term)}",
               shape="doublecircle" if term == one else "circle")
    g.edge("start", f"q{c.initial}")
    for state in range(c.size):
        targets: Dict[int, List[str]] = OrderedDict()
        for k, target in enumerate(c.transitions[state]):
            targets.setdefault(target, []).append(c.alphabet[k])
        for target, symbols in targets.items():
            g.edge(f"q{state}", f"q{target}", label=",".join(symbols))
    return g.source


def emit_text(c: Cdfa, header: Sequence[str] = ()) -> str:
    """Summary lines followed by the state table"""
    lines = list(header)
    lines.append(f"states: {c.size}")
    lines.append(c.to_frame().to_string())
    return "\n".join(lines) + "\n"


def quasi_order_to_dict(report: QuasiOrderReport) -> Dict[str, Any]:
    relation = report.relation
    lat = relation.lattice
    return OrderedDict([
        ("class", report.class_checked.value),
        ("holds", report.holds),
        ("reflexive", report.reflexive),
        ("transitive", report.transitive),
        ("iterations", report.iterations_used),
        ("family_size", report.family_size),
        ("distinct_rows", distinct_rows(relation).count),
        ("relation", [[lat.json_value(v) for v in row] for row in relation.entries]),
    ])


def emit_quasi_order_text(report: QuasiOrderReport, names: Sequence[str]) -> str:
    partition = distinct_rows(report.relation)
    lines = [
        report.relation.to_frame(names).to_string(),
        f"class: {report.class_checked.value}",
        f"holds: {str(report.holds).lower()}",
        f"reflexive: {str(report.reflexive).lower()}",
        f"transitive: {str(report.transitive).lower()}",
    ]
    if report.iterations_used is not None:
        lines.append(f"iterations: {report.iterations_used}")
    if report.family_size is not None:
        lines.append(f"family size: {report.family_size}")
    lines.append(f"distinct rows: {partition.count}")
    return "\n".join(lines) + "\n"
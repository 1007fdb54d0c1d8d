"""Deterministic JSON documents for seeds and mutation paths.

Rationals are serialized as reduced ``[numerator, denominator]`` integer
pairs with positive denominator; nothing is ever a float.  Serialization
is byte-deterministic (sorted keys, fixed separators), and parsing
reconstructs the seed from its defining data and then verifies that every
matrix entry and label in the document matches the reconstruction exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import VerificationError
from .positions import PositionTable, fix_word
from .seeds import QuantumSeed, build_seed


def _frac(x: Fraction) -> list[int]:
    f = Fraction(x)
    return [f.numerator, f.denominator]


def table_header(table: PositionTable) -> dict:
    return {
        "lie_type": table.datum.lie_type,
        "rank": table.datum.rank,
        "levi": sorted(table.levi),
        "word": list(table.word),
    }


def seed_document(seed: QuantumSeed) -> dict:
    cluster = seed.cluster
    table = seed.table
    doc = table_header(table)
    doc["strings"] = list(cluster.strings)
    doc["variant"] = cluster.variant
    doc["labels"] = [
        {
            "s": lab.s,
            "u_word": list(table.occ_prefix(lab.s, lab.i).word),
            "v_word": list(table.occ_prefix(lab.s, lab.j).word),
            "mutable": bool(cluster.mutable[k]),
        }
        for k, lab in enumerate(cluster.labels)
    ]
    doc["L"] = [[_frac(x) for x in row] for row in seed.lam]
    doc["B"] = [list(row) for row in seed.bmat]
    report = _compat_summary(seed)
    doc["diagnostics"] = report
    return doc


def _compat_summary(seed: QuantumSeed) -> dict:
    from .seeds import check_compatible

    report = check_compatible(seed)
    return {
        "compatible": report.ok,
        "diagonal": [_frac(x) for x in report.diagonal],
        "columns": [
            {
                "row": info.row,
                "s": info.s,
                "sign": info.sign,
                "kind": info.kind,
                "repaired": info.repaired,
            }
            for info in seed.columns
        ],
        "failures": [
            [c, i, _frac(v), _frac(e)] for c, i, v, e in report.failures
        ],
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def parse_seed_document(doc: dict) -> QuantumSeed:
    """Rebuild the seed a document describes and verify the document
    against it entry by entry."""
    table = fix_word(doc["lie_type"], doc["rank"], doc["levi"], doc["word"])
    seed = build_seed(table, tuple(doc["strings"]), doc["variant"])
    rebuilt = seed_document(seed)
    for key in ("labels", "L", "B"):
        if rebuilt[key] != doc[key]:
            raise VerificationError(f"document field {key!r} does not round-trip")
    return seed

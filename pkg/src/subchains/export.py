"""JSON and CSV serialization of lattices and chain counts."""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .classify import label
from .group import ElementTable, close_generators, subgroup_from_generators
from .lattice import SubgroupLattice
from .perm import format_permutation, parse_permutation

__all__ = ["lattice_to_dict", "lattice_from_dict", "dumps", "lattice_csv", "rows_csv"]


def _cycles(table: ElementTable, indices) -> list[str]:
    return [format_permutation(table.elements[i]) for i in indices]


def lattice_to_dict(lattice: SubgroupLattice) -> dict[str, Any]:
    t = lattice.parent
    return {
        "group": {
            "name": t.name,
            "degree": t.degree,
            "order": t.order,
            "generators": [format_permutation(g) for g in t.generators],
        },
        "nodes": [
            {
                "id": i,
                "order": lattice.order(i),
                "label": label(lattice.handle(i)),
                "generators": _cycles(t, lattice.generators[i]),
            }
            for i in range(len(lattice))
        ],
        "covers": [[x, y] for x, y in lattice.covers],
        "maximal_of_top": list(lattice.lower_covers[lattice.top]),
    }


def lattice_from_dict(doc: dict[str, Any]) -> SubgroupLattice:
    """Rebuild a lattice from :func:`lattice_to_dict` output.

    Node ids are recomputed from the deterministic ordering and checked
    against the document, as is the covering relation.
    """
    g = doc["group"]
    degree = g["degree"]
    table = close_generators([parse_permutation(s, degree) for s in g["generators"]],
                             degree, name=g.get("name", ""))
    if table.order != g["order"]:
        raise ValueError(f"group order {table.order} does not match document ({g['order']})")
    masks, gens = [], []
    for node in doc["nodes"]:
        idx = [table.index(s) for s in node["generators"]]
        h = subgroup_from_generators(table, idx)
        if h.order != node["order"]:
            raise ValueError(f"node {node['id']} has order {h.order}, document says {node['order']}")
        masks.append(h.mask)
        gens.append(tuple(idx))
    lattice = SubgroupLattice(table, masks, gens)
    if [list(c) for c in lattice.covers] != [list(c) for c in doc["covers"]]:
        raise ValueError("covering relation does not match document")
    return lattice


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def rows_csv(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def lattice_csv(lattice: SubgroupLattice) -> str:
    doc = lattice_to_dict(lattice)
    maximal = set(doc["maximal_of_top"])
    rows = [[n["id"], n["order"], n["label"], " ".join(n["generators"]),
             " ".join(str(y) for y in lattice.upper_covers[n["id"]]),
             int(n["id"] in maximal)] for n in doc["nodes"]]
    return rows_csv(["id", "order", "label", "generators", "covered_by", "maximal_of_top"], rows)

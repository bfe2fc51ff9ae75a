#!/usr/bin/env python3
"""Regenerate the bundled edge-list fixtures from the family constructions."""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from rp3link.families import petersen_family, sporadic_graphs, therefore_family
from rp3link.io_formats import emit_edge_list

OUT = Path(__file__).resolve().parents[1] / "src" / "rp3link" / "data"

FAMILY_FILES = {
    "K6": "k6.txt",
    "K331": "k331.txt",
    "P7": "p7.txt",
    "K44-e": "k44_minus_e.txt",
    "P8": "p8.txt",
    "P9": "p9.txt",
    "Petersen": "petersen.txt",
}
THEREFORE_FILES = {
    "K6t": "k6_therefore.txt",
    "P7At": "p7a_therefore.txt",
    "P7Bt": "p7b_therefore.txt",
    "P8Bt": "p8b_therefore.txt",
    "P9Bt": "p9b_therefore.txt",
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    fam = petersen_family()
    for name, fname in FAMILY_FILES.items():
        (OUT / fname).write_text(emit_edge_list(fam.members[name]))
    for name, g in sporadic_graphs().items():
        if name == "K44-e":
            continue
        fname = {
            "K7-2adj": "k7_minus_two_adjacent.txt",
            "K7-2nonadj": "k7_minus_two_nonadjacent.txt",
        }[name]
        (OUT / fname).write_text(emit_edge_list(g))
    tf = therefore_family()
    for name, fname in THEREFORE_FILES.items():
        (OUT / fname).write_text(emit_edge_list(tf.members[name]))
    for n1, n2, idx, g in tf.gluings:
        if (n1, n2, idx) == ("K6t", "K6t", 1):
            (OUT / "k6_therefore_k6.txt").write_text(emit_edge_list(g))
        if (n1, n2, idx) == ("P9Bt", "P9Bt", 1):
            (OUT / "p9b_therefore_p9b.txt").write_text(emit_edge_list(g))
    print(f"wrote fixtures to {OUT}")


if __name__ == "__main__":
    main()

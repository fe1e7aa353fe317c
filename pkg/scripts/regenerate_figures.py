"""Write the four pictured graphs, plus the induced matching on E9, as DOT and JSON.

    python scripts/regenerate_figures.py [outdir]
"""

import sys
from pathlib import Path

from ringgraph.corpus import get_ring
from ringgraph.graphcore import build_delta, build_gamma, export_dot, export_json, shape

FIGURES = [
    ("gamma_E4_0", "E4", "0", False),
    ("gamma_E4_a+b", "E4", "a+b", False),
    ("gamma_E9_0", "E9", "0", False),
    ("gamma_E9_a+2b", "E9", "a+2b", False),
    ("delta_E9_a+2b", "E9", "a+2b", True),
]


def main(outdir="figures"):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for stem, ring, r, induced in FIGURES:
        R = get_ring(ring)
        x = R.element(r)
        G = build_delta(R, x) if induced else build_gamma(R, x)
        (out / f"{stem}.dot").write_text(export_dot(G))
        (out / f"{stem}.json").write_text(export_json(G))
        s = shape(G)
        print(f"{stem:<16} {G.vertex_count:>2} vertices {G.edge_count:>3} edges  "
              f"degrees {sorted(G.degrees)}  regular={s.regular_degree}")


if __name__ == "__main__":
    main(*sys.argv[1:2])

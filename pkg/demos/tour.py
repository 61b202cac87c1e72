"""A guided tour of the library: run with  python demos/tour.py

Walks one Schubert variety through every analysis the package offers, then
prints the global censuses.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from schubert_a2 import (
    classify_schubert,
    enumerate_smooth_varieties,
    equivariant_multiplicity,
    format_word,
    hexagon,
    interval,
    kumar_smooth,
    length,
    leq,
    leq_oracle,
    maximal_nrs,
    maximal_singular,
    nrs_codimension,
    parse_word,
    q_table,
    singular_codim,
    smooth_points,
    spiral_factorizations,
)
from schubert_a2.alcove import classify

W = "01210120"  # an owner of length 8 in an odd chamber


def show(title, value=""):
    print("%-34s %s" % (title + ":", value))


def main():
    w = parse_word(W)
    show("word", W)
    show("canonical form", w)
    show("length", length(w))
    show("region", classify(w))

    hx = hexagon(w)
    show("hexagon vertices", " ".join(format_word(v) or "e" for v in hx.vertices))
    members = interval(w)
    show("interval size", len(members))
    agree = all(leq(x, w) == leq_oracle(x, w) for x in members)
    show("hull agrees with oracle", agree)

    (u1, v1), (u2, v2) = spiral_factorizations(w)
    show("spiral factorizations",
         "%s * %s   and   %s * %s" % tuple(format_word(z) for z in (u1, v1, u2, v2)))

    tab = q_table(w)
    by_q = {}
    for x, (q, _tag) in tab.entries.items():
        by_q.setdefault(q, []).append(x)
    show("q histogram", {q: len(v) for q, v in sorted(by_q.items())})

    show("classification", classify_schubert(w))
    show("nrs codimension", nrs_codimension(w))
    show("singular codimension", singular_codim(w))
    show("maximal nrs points", sorted(format_word(z) for z in maximal_nrs(w)))
    show("maximal singular points", sorted(format_word(z) for z in maximal_singular(w)))
    show("smooth point count", len(smooth_points(w)))

    x = sorted(maximal_singular(w), key=format_word)[0]
    show("multiplicity at %s" % format_word(x), equivariant_multiplicity(w, x))
    show("passes smoothness test", kumar_smooth(w, x))

    print()
    print("smooth Schubert varieties:")
    for row in enumerate_smooth_varieties():
        print("  length %d  %-22s %2d members" % (row["length"], row["pattern"], row["count"]))


if __name__ == "__main__":
    main()

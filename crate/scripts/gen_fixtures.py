#!/usr/bin/env python3
"""Regenerate the committed fixture files under fixtures/.

Knot-table diagrams come from the `database_knotinfo` package (KnotInfo's
pd_notation column, copied verbatim). Positive/homogeneous braid diagrams
are built here from braid words with the same closure convention as
`PlanarDiagram::from_braid` in the core crate.
"""
import os
import sys

from database_knotinfo import link_list

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")

PUBLISHED_GENUS = {
    "11n_34": 3, "11n_45": 3, "11n_73": 3, "11n_152": 3,
    "11n_42": 2, "11n_67": 2, "11n_97": 2,
}


def pd_text(name, crossings):
    body = " ".join("X(%d,%d,%d,%d)" % tuple(x) for x in crossings)
    return ("%s PD: %s" % (name, body)).rstrip()


def braid_pd(word, strands):
    """PD code of the closure of a braid word (list of +-i, 1-based)."""
    # segments: each crossing consumes the current segment at two positions
    pos = list(range(strands))
    next_seg = strands
    succ = {}
    raw = []
    for g in word:
        i = abs(g) - 1
        a, b = pos[i], pos[i + 1]
        na, nb = next_seg, next_seg + 1
        next_seg += 2
        # strand entering at i leaves at i+1 and vice versa
        succ[a] = nb
        succ[b] = na
        raw.append((g, a, b, na, nb))
        pos[i], pos[i + 1] = na, nb
    ident = {pos[p]: p for p in range(strands)}
    canon = lambda s: ident.get(s, s) if s >= strands else s
    # final segment at position p is the initial segment p
    succ = {canon(k): canon(v) for k, v in succ.items()}
    raw = [(g, canon(a), canon(b), canon(na), canon(nb)) for (g, a, b, na, nb) in raw]
    labels = {}
    comps = 0
    for start in sorted(succ):
        if start in labels:
            continue
        comps += 1
        s = start
        while s not in labels:
            labels[s] = len(labels) + 1
            s = succ[s]
    out = []
    for g, a, b, na, nb in raw:
        la, lb, lna, lnb = labels[a], labels[b], labels[na], labels[nb]
        # a: SW in, b: SE in, na: NW out (from b), nb: NE out (from a)
        if g > 0:
            # over strand SE -> NW; under SW -> NE
            out.append((la, lb, lnb, lna))
        else:
            # over strand SW -> NE; under SE -> NW
            out.append((lb, lnb, lna, la))
    return out, comps


def main():
    kl = {k["name"]: k for k in link_list()}
    names = [k for k in kl if "_" in k and k[0].isdigit() and "n" not in k and "a" not in k.split("_")[0]]
    rolfsen = [n for n in names if 3 <= int(n.split("_")[0]) <= 9]
    rolfsen.sort(key=lambda n: (int(n.split("_")[0]), int(n.split("_")[1])))

    def entry(n, extra=""):
        k = kl[n]
        pd = eval(k["pd_notation"])
        line = pd_text(n, pd)
        src = ' source="KnotInfo pd_notation %s"' % n
        return line + " @" + extra + src

    with open(os.path.join(OUT, "rolfsen_3to9.pd"), "w") as f:
        f.write("# Prime knots with 3..9 crossings, PD codes from KnotInfo.\n")
        for n in rolfsen:
            f.write(entry(n) + "\n")

    with open(os.path.join(OUT, "knotinfo_reference.tsv"), "w") as f:
        f.write("# name\tthree_genus\talexander coefficients (ascending powers of t), from KnotInfo\n")
        for n in rolfsen + list(PUBLISHED_GENUS):
            k = kl[n]
            vec = eval(k["alexander_polynomial_vector"])
            f.write("%s\t%s\t%s\n" % (n, k["three_genus"], ",".join(str(c) for c in vec[2:])))

    with open(os.path.join(OUT, "alternating_3to8.pd"), "w") as f:
        f.write("# Alternating prime knots with 3..8 crossings, PD codes from KnotInfo.\n")
        for n in rolfsen:
            if int(n.split("_")[0]) <= 8 and kl[n]["alternating"] == "Y":
                f.write(entry(n) + "\n")

    with open(os.path.join(OUT, "eleven_crossing.pd"), "w") as f:
        f.write("# The seven 11-crossing knots with genus larger than half the breadth.\n")
        f.write("# PD codes from KnotInfo; genus annotations are published values.\n")
        for n in ["11n_34", "11n_45", "11n_73", "11n_152", "11n_42", "11n_67", "11n_97"]:
            k = kl[n]
            pd = eval(k["pd_notation"])
            f.write(pd_text(n, pd) + ' @ genus_paper=%d source="published genus; PD from KnotInfo %s"\n' % (PUBLISHED_GENUS[n], n))

    braids = [
        ("T(2,5)", [1] * 5, 2),
        ("T(2,7)", [1] * 7, 2),
        ("T(3,4)", [1, 2] * 4, 3),
        ("T(3,5)", [1, 2] * 5, 3),
        ("T(4,5)", [1, 2, 3] * 5, 4),
        ("10_139_braid", [1, 1, 1, 1, 2, 1, 1, 1, 2, 2], 3),
        ("10_124_braid", [1, 1, 1, 1, 1, 2, 1, 1, 1, 2], 3),
        ("mixed_homogeneous_1", [1, 1, 1, 2, -3, -3, -3, 2, 2], 4),
        ("mixed_homogeneous_2", [1, 1, 2, 1, 2, -3, 2, -3, 2, 2, -3], 4),
    ]
    with open(os.path.join(OUT, "homogeneous.pd"), "w") as f:
        f.write("# Homogeneous braid-closure diagrams (each generator used with one sign).\n")
        for name, word, n in braids:
            pd, comps = braid_pd(word, n)
            if comps != 1:
                sys.exit("%s closes to %d components" % (name, comps))
            w = " ".join(str(g) for g in word)
            f.write(pd_text(name, pd) + ' @ source="closure of braid word [%s] on %d strands"\n' % (w, n))

    with open(os.path.join(OUT, "basic.pd"), "w") as f:
        f.write("# Trefoil, figure-eight, unknot.\n")
        f.write('trefoil PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) @ source="sign calibration code"\n')
        f.write(entry("4_1").replace("4_1 PD", "figure_eight PD", 1) + "\n")
        f.write("unknot PD:\n")


if __name__ == "__main__":
    main()

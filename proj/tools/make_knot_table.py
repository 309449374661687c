#!/usr/bin/env python3
"""Regenerate data/knot_table.csv from the KnotInfo database.

    pip install database_knotinfo
    python3 tools/make_knot_table.py > data/knot_table.csv

Only the columns the certifier consumes are kept: crossing number, 3-genus,
alternating flag, braid index, and the torus type for the torus knots.
"""

import csv
import os
import re
import sys

import database_knotinfo

MAX_CROSSINGS = 12


def main():
    path = os.path.join(os.path.dirname(database_knotinfo.__file__),
                        "csv_data", "knotinfo_data_complete.csv")
    with open(path, newline="") as f:
        rows = list(csv.reader(f, delimiter="|"))
    header = rows[0]
    col = {name: i for i, name in enumerate(header)}
    # rows[1] holds human-readable column titles
    out = csv.writer(sys.stdout, lineterminator="\n")
    print("# Knots through %d crossings; values from KnotInfo "
          "(https://knotinfo.math.indiana.edu), database_knotinfo %s."
          % (MAX_CROSSINGS, database_knotinfo.version()))
    out.writerow(["name", "c2", "genus", "components", "is_t2n", "is_trivial",
                  "alternating", "braid_index", "torus"])
    for r in rows[2:]:
        c2 = int(r[col["crossing_number"]])
        if c2 > MAX_CROSSINGS:
            continue
        geo = r[col["geometric_type"]]
        m = re.fullmatch(r"torus knot T\((\d+),(\d+)\)", geo)
        torus = "%s:%s" % m.groups() if m else ""
        is_t2n = 1 if m and m.group(1) == "2" else 0
        out.writerow([
            r[col["name"]], c2, int(r[col["three_genus"]]), 1, is_t2n,
            1 if c2 == 0 else 0,
            1 if r[col["alternating"]] == "Y" else 0,
            int(r[col["braid_index"]]),
            torus,
        ])


if __name__ == "__main__":
    main()

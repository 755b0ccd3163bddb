"""Convert the C. elegans connectivity table to a pathhom edge list.

Input: the Varshney et al. (2011) `NeuronConnect` table exported as CSV or
TSV, with columns Neuron 1, Neuron 2, Type, Nbr. Only chemical sends
(`S`, `Sp`) are kept; each ordered pair gets the summed synapse count as
its weight.

    python celegans_to_edgelist.py NeuronConnect.csv > celegans.txt
    PATHHOM_CELEGANS=celegans.txt cargo test -p pathhom --test acceptance
"""

import csv
import sys
from collections import defaultdict


def main(path):
    with open(path, newline="") as fh:
        sample = fh.read(4096)
        fh.seek(0)
        dialect = csv.Sniffer().sniff(sample, delimiters=",\t;")
        rows = list(csv.reader(fh, dialect))
    weights = defaultdict(int)
    for row in rows[1:]:
        if len(row) < 4:
            continue
        a, b, kind, nbr = (x.strip() for x in row[:4])
        if kind in ("S", "Sp") and a != b:
            weights[(a, b)] += int(nbr)
    for (a, b), w in sorted(weights.items()):
        print(f"{a} {b} {w}")
    vertices = {v for pair in weights for v in pair}
    print(f"{len(vertices)} vertices, {len(weights)} edges", file=sys.stderr)


if __name__ == "__main__":
    main(sys.argv[1])

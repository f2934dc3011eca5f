#!/usr/bin/env python3
"""Writes the end-to-end fixture set under fixtures/e2e/.

benchmark.csv   hand-scored pairs drawn from the fixture corpus vocabulary
path_based.vec  stand-in path-based embeddings (word2vec text format)
tags.csv        subset tags for some of the pairs
dictionary.txt  small English word list

    python3 fixtures/gen_e2e.py
"""

import random
from pathlib import Path

from gen_corpus import HELPERS, TOPICS

HERE = Path(__file__).resolve().parent
OUT = HERE / "e2e"
DIM = 16

# id1, id2, relatedness, similarity, contextual (None = filtered out)
PAIRS = [
    ("substr", "substring", 0.94, 1.00, 0.89),
    ("count", "total", 0.83, 0.81, 0.79),
    ("rows", "columns", 0.88, 0.08, 0.22),
    ("reset", "clear", 0.90, 0.89, 0.94),
    ("item", "entry", 0.78, 0.77, 0.92),
    ("minutes", "seconds", 0.91, 0.22, 0.06),
    ("width", "height", 0.85, 0.15, 0.20),
    ("len", "length", 0.95, 0.97, 0.90),
    ("size", "length", 0.80, 0.70, 0.65),
    ("start", "begin", 0.90, 0.92, 0.85),
    ("init", "setup", 0.82, 0.75, 0.70),
    ("element", "elem", 0.93, 0.95, 0.88),
    ("node", "element", 0.75, 0.55, 0.60),
    ("flush", "wipe", 0.70, 0.60, None),
    ("empty", "clear", 0.72, 0.55, 0.50),
    ("timer", "clock", 0.70, 0.45, 0.40),
    ("hours", "minutes", 0.88, 0.20, 0.10),
    ("text", "str", 0.80, 0.78, 0.70),
    ("slice", "substring", 0.78, 0.65, 0.55),
    ("sum", "total", 0.85, 0.80, 0.82),
    ("num", "count", 0.80, 0.75, 0.71),
    ("grid", "table", 0.72, 0.50, 0.45),
    ("cells", "rows", 0.70, 0.20, 0.25),
    ("record", "entry", 0.76, 0.70, 0.66),
    ("launch", "open", 0.55, 0.40, None),
    ("delay", "timer", 0.65, 0.30, 0.28),
    ("width", "options", 0.15, 0.05, 0.08),
    ("callback", "matrix", 0.05, 0.02, 0.03),
    ("purge", "index", 0.08, 0.03, 0.05),
    ("result", "value", 0.55, 0.45, 0.40),
    ("data", "chars", 0.30, 0.15, 0.12),
    ("extent", "size", 0.75, 0.68, 0.60),
    ("tally", "amount", 0.65, 0.55, 0.50),
    ("test", "seconds", 0.06, 0.02, 0.02),
]

TAGS = [
    ("substr|substring", "abbreviations"),
    ("len|length", "abbreviations"),
    ("elem|element", "abbreviations"),
    ("str|text", "abbreviations"),
    ("columns|rows", "opposites"),
    ("height|width", "opposites"),
    ("begin|start", "synonyms"),
    ("clear|reset", "synonyms"),
    ("count|total", "synonyms"),
    ("entry|item", "synonyms"),
    ("sum|total", "synonyms"),
]

WORDS = """
amount begin callback cell chars clear clock column count data delay element
empty entry extent flush grid height hour index init item launch length matrix
minute node number open option purge record reset result row second setup size
slice start sum table tally test text timer total value width wipe
columns rows cells minutes seconds hours options
""".split()


def main():
    OUT.mkdir(exist_ok=True)
    with open(OUT / "benchmark.csv", "w") as f:
        f.write("id1,id2,relatedness,similarity,contextual_similarity\n")
        for a, b, r, s, c in PAIRS:
            f.write(f"{a},{b},{r:.2f},{s:.2f},{'' if c is None else f'{c:.2f}'}\n")

    rng = random.Random(7)
    vectors = {}
    for topic in TOPICS:
        centre = [rng.gauss(0, 1) for _ in range(DIM)]
        for w in topic:
            vectors[w] = [c + rng.gauss(0, 0.8) for c in centre]
    for w in HELPERS + ["test"]:
        vectors[w] = [rng.gauss(0, 1) for _ in range(DIM)]
    with open(OUT / "path_based.vec", "w") as f:
        f.write(f"{len(vectors)} {DIM}\n")
        for w in sorted(vectors):
            f.write(w + " " + " ".join(f"{x:.6f}" for x in vectors[w]) + "\n")

    with open(OUT / "tags.csv", "w") as f:
        f.write("pair_id,tag\n")
        for key, tag in TAGS:
            f.write(f"{key},{tag}\n")

    (OUT / "dictionary.txt").write_text("\n".join(sorted(set(WORDS))) + "\n")


if __name__ == "__main__":
    main()

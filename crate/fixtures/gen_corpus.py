#!/usr/bin/env python3
"""Generates the fixture JavaScript corpus and its expected identifier counts.

Every statement template knows which identifiers it emits in code and in
which role, so the counts are tallied here without any lexing. Comments,
strings, templates and regex literals mention vocabulary words as decoys
that must not be counted.

    python3 fixtures/gen_corpus.py   # rewrites fixtures/corpus/ and corpus_counts.json
"""

import json
import random
from collections import defaultdict
from pathlib import Path

HERE = Path(__file__).resolve().parent
N_FILES = 100
SEED = 20190611

TOPICS = [
    ["width", "height", "size", "length", "len", "extent"],
    ["count", "total", "sum", "num", "amount", "tally"],
    ["rows", "columns", "cells", "grid", "table", "matrix"],
    ["start", "begin", "init", "setup", "launch", "open"],
    ["item", "entry", "element", "node", "record", "elem"],
    ["reset", "clear", "flush", "wipe", "purge", "empty"],
    ["minutes", "seconds", "hours", "timer", "clock", "delay"],
    ["substr", "substring", "slice", "chars", "text", "str"],
]
HELPERS = ["result", "data", "options", "callback", "index", "value"]


class File:
    def __init__(self):
        self.lines = []
        self.counts = defaultdict(lambda: defaultdict(int))

    def emit(self, text, *occ):
        self.lines.extend(text.split("\n"))
        for name, role in occ:
            self.counts[name][role] += 1


def statement(f, rng, words):
    a, b, c = rng.sample(words, 3)
    h = rng.choice(HELPERS)
    k = rng.randrange(16)
    V, F, P, O = "variable", "function", "property", "other"
    if k == 0:
        f.emit(f"var {a} = {b}.{c};", (a, V), (b, V), (c, P))
    elif k == 1:
        f.emit(
            f"function {a}({b}, {c}) {{\n  return {b} + {c};\n}}",
            (a, F), (b, V), (c, V), (b, V), (c, V),
        )
    elif k == 2:
        f.emit(f"{h}.{a}({b});", (h, V), (a, F), (b, V))
    elif k == 3:
        f.emit(f"// {a} and {b} only appear in this comment")
    elif k == 4:
        f.emit(f"const {a} = '{b} {c}' + \"{h}\";", (a, V))
    elif k == 5:
        f.emit(
            f"let {a} = {{ {b}: {c}, {h}: 1 }};",
            (a, V), (b, P), (c, V), (h, P),
        )
    elif k == 6:
        f.emit(f"/* {b}({c}) */ {a}++;", (a, V))
    elif k == 7:
        f.emit(f"var {a} = {b} / 2 / {c};", (a, V), (b, V), (c, V))
    elif k == 8:
        f.emit(f"var {a} = /{b}+[/]x/g.test({c});", (a, V), ("test", F), (c, V))
    elif k == 9:
        f.emit(f"var {a} = `${{{b}}} and {c}`;", (a, V))
    elif k == 10:
        f.emit(f"class {a} extends {b} {{}}", (a, O), (b, O))
    elif k == 11:
        f.emit(
            f"if ({a} > {b}) {{\n  {h}.{c} = {a};\n}}",
            (a, V), (b, V), (h, V), (c, P), (a, V),
        )
    elif k == 12:
        f.emit(f"{a}({b}.{c}, {h});", (a, F), (b, V), (c, P), (h, V))
    elif k == 13:
        f.emit(f"var {a} = \"café {b}\"; // naïve {c}", (a, V))
    elif k == 14:
        f.emit(
            f"for (var {a} = 0; {a} < {b}.{c}; {a}++) {{\n  {h}({a});\n}}",
            (a, V), (a, V), (b, V), (c, P), (a, V), (h, F), (a, V),
        )
    else:
        f.emit(f"return {a} ? {b} : {c};", (a, V), (b, V), (c, V))


def main():
    rng = random.Random(SEED)
    out = HERE / "corpus"
    out.mkdir(exist_ok=True)
    for old in out.glob("*.js"):
        old.unlink()
    totals = defaultdict(lambda: defaultdict(int))
    for i in range(N_FILES):
        topic = TOPICS[i % len(TOPICS)]
        # Mostly on-topic names, occasionally one from another topic.
        words = list(topic) + rng.sample(TOPICS[(i + 3) % len(TOPICS)], 1)
        f = File()
        for _ in range(rng.randrange(12, 30)):
            statement(f, rng, words)
        sep = "\r\n" if i % 10 == 9 else "\n"
        (out / f"file{i:03}.js").write_bytes((sep.join(f.lines) + sep).encode("utf-8"))
        for name, roles in f.counts.items():
            for role, n in roles.items():
                totals[name][role] += n
    expected = {
        "files": N_FILES,
        "total": sum(n for roles in totals.values() for n in roles.values()),
        "identifiers": {
            name: {r: roles.get(r, 0) for r in ("function", "variable", "property", "other")}
            for name, roles in sorted(totals.items())
        },
    }
    (HERE / "corpus_counts.json").write_text(json.dumps(expected, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()

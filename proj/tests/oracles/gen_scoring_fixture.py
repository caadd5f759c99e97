#!/usr/bin/env python3
# Copyright 2026 The Taalwatch Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Builds the frozen scoring fixture.

Each text is assembled from segments whose lexicon contribution is known by
construction, so the expected (polarity sum, token count) pair never depends
on the tokenizer under test. Run once; the outputs are committed.

    gen_scoring_fixture.py <out_dir>
"""

import random
import sys
from pathlib import Path

POSITIVE = ["masaya", "happy", "maganda", "great", "salamat", "wonderful", "ligtas", "love"]
NEGATIVE = ["malungkot", "sad", "patay", "awful", "takot", "baho", "terrible", "galit"]
ZERO = ["lawa", "lake", "isda", "fish"]
FILLER = ["the", "of", "and", "sa", "ng", "ang", "mga", "today", "bukas", "we", "tayo",
          "boat", "water", "tubig", "2013", "x7", "ko", "po"]
# (written forms, polarity of each covered token, token count)
PHRASES = [
    (["walang kwenta", "Walang-Kwenta", "WALANG KWENTA"], -1, 2),
    (["walang problema", "walang-problema"], 1, 2),
    (["kahanga-hanga", "Kahanga Hanga"], 1, 2),
    (["hindi na maganda", "Hindi na MAGANDA"], -1, 3),
]
UNICODE_WORDS = [("ÉXITO", 1), ("éxito", 1), ("Ñaño", 1), ("DÉBÂCLE", -1), ("débâcle", -1)]
COS = [("amoy asupre", 2), ("berdeng tubig", 2), ("maitim na tubig", 3), ("nahibay na isda", 3)]
URLS = ["http://t.co/abc", "https://example.org/x?y=1", "www.taal.ph/news"]
MENTIONS = ["@juan", "@phivolcs_dost", "@Maria99"]
SPLIT_FILLERS = [("it's", 2), ("don't", 2), ("up-to-date", 3), ("e-mail", 2)]
EMOJI = ["\U0001F600", "\U0001F41F", "❤️"]
SEPARATORS = [" ", "  ", ", ", "! ", " - ", "... ", " / ", " (", ") ", "? ", "; ", "　"]

POLARITY = {w: 1 for w in POSITIVE}
POLARITY.update({w: -1 for w in NEGATIVE})


def case_variant(rng, word):
    r = rng.random()
    if r < 0.15:
        return word.upper()
    if r < 0.3:
        return word.capitalize()
    return word


def word_polarity(word):
    return POLARITY.get(word, 0)


def segment(rng):
    """Returns (text, polarity_sum, n_tokens) for one self-delimiting segment."""
    kind = rng.random()
    if kind < 0.45:
        word = rng.choice(POSITIVE + NEGATIVE + ZERO + FILLER)
        return case_variant(rng, word), word_polarity(word), 1
    if kind < 0.55:
        forms, pol, n = rng.choice(PHRASES)
        return rng.choice(forms), pol * n, n
    if kind < 0.6:
        text, pol = rng.choice(UNICODE_WORDS)
        return text, pol, 1
    if kind < 0.66:
        word = rng.choice(POSITIVE + NEGATIVE + FILLER)
        return "#" + case_variant(rng, word), word_polarity(word), 1
    if kind < 0.72:
        text, n = rng.choice(COS)
        return text, 0, n
    if kind < 0.78:
        return rng.choice(URLS), 0, 0
    if kind < 0.84:
        return rng.choice(MENTIONS), 0, 0
    if kind < 0.9:
        text, n = rng.choice(SPLIT_FILLERS)
        return text, 0, n
    if kind < 0.95:
        return rng.choice(EMOJI), 0, 0
    word = rng.choice(POSITIVE + NEGATIVE)
    return case_variant(rng, word) + rng.choice(EMOJI), word_polarity(word), 1


def build_text(rng):
    parts = []
    total = 0
    n = 0
    for _ in range(rng.randint(0, 18)):
        text, pol, count = segment(rng)
        parts.append(text)
        total += pol
        n += count
    out = ""
    for i, part in enumerate(parts):
        out += part
        if i + 1 < len(parts):
            sep = rng.choice(SEPARATORS)
            # URLs and mentions must stand as their own whitespace chunk.
            if not sep.startswith(" ") and sep != "　":
                sep = " " + sep
            if not sep.endswith(" ") and sep != "　":
                sep = sep + " "
            out += sep
    return out, total, n


def license_header():
    # Reuse this script's own license block for the generated files.
    lines = Path(__file__).read_text(encoding="utf-8").splitlines()
    lines = [line for line in lines[: lines.index("")] if not line.startswith("#!")]
    return "".join(line + "\n" for line in lines)


def main():
    out_dir = Path(sys.argv[1])
    rng = random.Random(20130202)
    rows = []
    # A few degenerate inputs first.
    rows.append(("", 0, 0))
    rows.append(("http://t.co/only @nobody", 0, 0))
    rows.append(("!!! ... ???", 0, 0))
    while len(rows) < 200:
        rows.append(build_text(rng))
    with open(out_dir / "scoring_fixture.tsv", "w", encoding="utf-8", newline="\n") as f:
        f.write(license_header())
        f.write("# id\tpolarity_sum\tn_tokens\ttext\n")
        for i, (text, total, n) in enumerate(rows):
            assert "\t" not in text and "\n" not in text
            f.write(f"fx{i:03d}\t{total}\t{n}\t{text}\n")
    with open(out_dir / "scoring_lexicon.tsv", "w", encoding="utf-8", newline="\n") as f:
        f.write(license_header())
        f.write("# Test lexicon for the scoring fixture.\n")
        for w in POSITIVE:
            f.write(f"{w}\ten\t1\n")
        for w in NEGATIVE:
            f.write(f"{w}\ten\t-1\n")
        for w in ZERO:
            f.write(f"{w}\tfil\t0\n")
        for forms, pol, _ in PHRASES:
            f.write(f"{forms[0]}\tfil\t{pol}\n")
        f.write("éxito\ten\t1\nñaño\tfil\t1\ndébâcle\ten\t-1\n")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
# Copyright 2026 The Neography Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Regenerates data/lexicon/fr_top2000.tsv from the wordfreq package.

Usage: python3 make_frequency_list.py [N] > fr_topN.tsv
"""
import re
import sys
import unicodedata

from wordfreq import top_n_list, word_frequency

LETTERS = re.compile(r"^[a-zàâçéèêëîïôûùü]+$")
SINGLE_LETTER_WORDS = {"a", "à", "y"}


def main():
    wanted = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    out = []
    for word in top_n_list("fr", wanted * 3):
        word = unicodedata.normalize("NFC", word)
        if not LETTERS.match(word):
            continue
        if len(word) < 2 and word not in SINGLE_LETTER_WORDS:
            continue
        out.append((word, round(word_frequency(word, "fr") * 1e8)))
        if len(out) == wanted:
            break
    print("# word\tcount (occurrences per 1e8 tokens, wordfreq 'fr')")
    for word, count in out:
        print(f"{word}\t{max(count, 1)}")


if __name__ == "__main__":
    main()

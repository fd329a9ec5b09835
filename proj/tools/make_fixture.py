#!/usr/bin/env python3
# Copyright 2026 The sumdenoise Authors.
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

"""Writes the deterministic 50-record test corpus (tests/data/fixture_50.jsonl).

Each article mixes function words, a handful of per-story names and content
words; each summary sentence is an in-order compression of a distinct article
sentence. Summaries are resampled until no two sentences share more than 80%
of their distinct tokens in either direction.
"""
import json
import random
import string
import sys

FUNCTION = ("the a of to and in for on was is with has that at by from his her "
            "he she it said after have be were as but an their").split()
CONTENT = ("club match season deal contract player coach league title goal "
           "win defeat fans stadium transfer summer offer agent press team "
           "city council vote budget plan school police report court judge "
           "storm river flood rescue hospital doctor patient study research "
           "market price shares profit company bank loan tax minister party "
           "election campaign voters border army troops attack peace talks "
           "museum artist film music award festival novel author show star "
           "weather snow winter road crash driver train airport flight crew "
           "family children mother father home village island coast beach "
           "phone app data privacy law ban rule fine charge case trial jury").split()
NAMES = ("alves barcelona santana madrid smith jones london paris obama "
         "clinton merkel tokyo sydney chelsea arsenal liverpool texas boston "
         "mumbai cairo garcia nguyen patel kim okafor silva").split()


def tokens(sentence):
    out = []
    for unit in sentence.split():
        unit = unit.strip(string.punctuation)
        if unit:
            out.append(unit.lower())
    return out


def overlap(a, b):
    ta, tb = set(tokens(a)), set(tokens(b))
    return len(ta & tb) / len(ta)


def article_sentence(rng, names):
    words = []
    for _ in range(rng.randint(12, 24)):
        u = rng.random()
        if u < 0.40:
            words.append(rng.choice(FUNCTION))
        elif u < 0.55:
            words.append(rng.choice(names))
        else:
            words.append(rng.choice(CONTENT))
    return " ".join(words) + " ."


def record(rng, idx):
    while True:
        names = rng.sample(NAMES, 4)
        article = [article_sentence(rng, names)
                   for _ in range(rng.randint(10, 15))]
        picked = sorted(rng.sample(range(len(article)), rng.randint(2, 5)))
        summary = []
        for a in picked:
            words = article[a].split()[:-1]
            kept = [w for w in words if rng.random() < 0.6]
            if len(kept) < 4:
                kept = words
            summary.append(" ".join(kept) + " .")
        ok = all(overlap(x, y) <= 0.8
                 for i, x in enumerate(summary)
                 for j, y in enumerate(summary) if i != j)
        if ok:
            return {"id": "story-%03d" % idx, "article": article,
                    "summary": summary}


def main():
    rng = random.Random(20190601)
    out = sys.argv[1] if len(sys.argv) > 1 else "tests/data/fixture_50.jsonl"
    with open(out, "w") as f:
        for i in range(50):
            f.write(json.dumps(record(rng, i), separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main()

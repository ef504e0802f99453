#!/usr/bin/env python3
# Copyright 2026 The STON Toolkit Authors.
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

"""Writes a synthetic N-sentence STON document for parser benchmarks.

Sentences come from fixed templates over the bundled lexicon and are encoded
with `ston encode`, so every sentence is valid and realizable.

  tools/make_synthetic.py --ston build/ston -n 100 > data/synthetic-100.ston
"""

import argparse
import random
import subprocess
import sys

SUBJECTS = ["man", "boy", "mother", "father", "child", "teacher", "student",
            "writer", "brother"]
ADJECTIVES = ["fat", "young", "old", "famous", "big", "tall"]
OBJECTS = ["apple", "book", "gift", "novel", "story", "car", "meat", "tree"]
VERBS = ["ate", "gave", "bought", "wrote", "read", "saw", "watched",
         "describes", "sees", "will buy", "will read"]
OBLIQUES = ["to the boy", "with the teacher", "in the city", "for the child",
            "from the market", "after the year"]


def sentence(rng):
    subj = f"the {rng.choice(ADJECTIVES)} {rng.choice(SUBJECTS)}"
    obj = rng.choice(["a", "the"]) + " " + rng.choice(OBJECTS)
    words = [subj, rng.choice(VERBS), obj]
    if rng.random() < 0.6:
        words.append(rng.choice(OBLIQUES))
    text = " ".join(words)
    return text[0].upper() + text[1:] + "."


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--ston", default="ston", help="path to the ston binary")
    parser.add_argument("-n", type=int, default=100, help="number of sentences")
    parser.add_argument("--seed", type=int, default=100)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    lines = "\n".join(sentence(rng) for _ in range(args.n)) + "\n"
    result = subprocess.run([args.ston, "encode"], input=lines, text=True,
                            capture_output=True, check=False)
    if result.returncode != 0:
        sys.stderr.write(result.stderr)
        return result.returncode
    sys.stdout.write(f"# Synthetic benchmark corpus: {args.n} sentences, seed "
                     f"{args.seed}. Generated by tools/make_synthetic.py.\n")
    sys.stdout.write(result.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Freezes NLTK sentence_bleu values (smoothing method 7) for 20 random pairs.

Run once under each NLTK version and merge:
  python gen_bleu_reference.py pairs > pairs.json
  <python with nltk 3.4> gen_bleu_reference.py score method7-legacy pairs.json > legacy.json
  <python with nltk 3.10> gen_bleu_reference.py score method7 pairs.json > modern.json
  python gen_bleu_reference.py merge pairs.json legacy.json modern.json > ../../data/bleu/reference.json
"""
import json
import random
import sys

VOCAB = ["yoda", "is", "a", "powerful", "jedi", "turns", "to", "the", "anakin", "sith",
         "lord", "obi-wan", "padmé", "brave", "emperor", "evil", "casann", "go", "na", "é"]


def pairs():
    rng = random.Random(20240611)
    out = []
    while len(out) < 20:
        ref = [rng.choice(VOCAB) for _ in range(rng.randint(3, 12))]
        cand = [rng.choice(VOCAB) for _ in range(rng.randint(2, 12))]
        if len(out) % 4 == 0:
            # Near copies exercise non-zero higher orders.
            cand = list(ref)
            for _ in range(rng.randint(0, 2)):
                cand[rng.randrange(len(cand))] = rng.choice(VOCAB)
        out.append({"reference": ref, "candidate": cand})
    return out


def score(label, items):
    import nltk
    from nltk.translate.bleu_score import SmoothingFunction, sentence_bleu
    sf = SmoothingFunction().method7
    return {"nltk": nltk.__version__, "label": label,
            "scores": [sentence_bleu([p["reference"]], p["candidate"], smoothing_function=sf)
                       for p in items]}


if __name__ == "__main__":
    mode = sys.argv[1]
    if mode == "pairs":
        json.dump(pairs(), sys.stdout, ensure_ascii=False, indent=1)
    elif mode == "score":
        json.dump(score(sys.argv[2], json.load(open(sys.argv[3]))), sys.stdout)
    elif mode == "merge":
        items = json.load(open(sys.argv[2]))
        for path in sys.argv[3:]:
            s = json.load(open(path))
            for item, v in zip(items, s["scores"]):
                item[s["label"]] = v
        json.dump({"versions": {json.load(open(p))["label"]: json.load(open(p))["nltk"]
                                for p in sys.argv[3:]},
                   "pairs": items}, sys.stdout, ensure_ascii=False, indent=1)

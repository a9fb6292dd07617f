#!/usr/bin/env python3
"""Regenerates the bundled fixture corpus under data/fixtures.

The vectors are built so that every listed neighbour has an exact cosine with
its anchor word: anchors are unit basis vectors and each neighbour is
s * e_anchor + sqrt(1 - s^2) * e_own.
"""

import json
import math
import pathlib
import re

OUT = pathlib.Path(__file__).resolve().parent / "fixtures"

POS = {
    "noun": """man mistake choice profession work ethics decision kitchen footsteps
        creak door molecule scientists metals asteroids study way women information
        user cases trustworthiness value page matter seconds woman cost life insights
        egocentrism projection attribution errors farmers market town square spring
        internet web friday""".split(),
    "verb": """likes acknowledge made choose apply makes sat heard showed duplicate
        hopes harvesting examined search assess knows trust opens moved""".split(),
    "adjective": """soft scuttling economic experienced probable medical british social
        multiple weekly alone""".split(),
    "adverb": "freely then online rather often better".split(),
    "determiner": "a an the every no some".split(),
}
POS_OF = {w: p for p, words in POS.items() for w in words}

LEMMA = {
    "likes": "like", "made": "make", "makes": "make", "sat": "sit", "heard": "hear",
    "footsteps": "footstep", "scientists": "scientist", "showed": "show",
    "hopes": "hope", "harvesting": "harvest", "metals": "metal",
    "asteroids": "asteroid", "women": "woman", "examined": "examine",
    "cases": "case", "seconds": "second", "knows": "know", "insights": "insight",
    "errors": "error", "opens": "open", "moved": "move", "farmers": "farmer",
}

TOKEN_RE = re.compile(r"\d+|\w+(?:[-']\w+)*|[^\w\s]")


def tokenize(text, entities=(), phrasal=(), pos_override=None):
    pos_override = pos_override or {}
    tokens = []
    for m in TOKEN_RE.finditer(text):
        surface = m.group()
        low = surface.lower()
        if surface.isdigit():
            pos = "number"
        else:
            pos = POS_OF.get(low, "other")
        pos = pos_override.get(surface, pos)
        tokens.append({
            "surface": surface,
            "lemma": LEMMA.get(low, low),
            "pos": pos,
            "entity": "none",
            "start": m.start(),
            "end": m.end(),
        })
    for phrase, tag in entities:
        mark_run(text, tokens, phrase, lambda t, tag=tag: t.update(entity=tag, pos="noun"))
    for phrase in phrasal:
        mark_run(text, tokens, phrase, lambda t: t.update(pos="phrasal-noun"))
    return tokens


def mark_run(text, tokens, phrase, apply):
    start = text.index(phrase)
    end = start + len(phrase)
    for t in tokens:
        if t["start"] >= start and t["end"] <= end:
            apply(t)


def sentence(text, roles=(), **kw):
    return {
        "text": text,
        "tokens": tokenize(text, **kw),
        "roles": [{"role": r, "first_token": a, "last_token": b} for r, a, b in roles],
    }


ARTICLES = [
    ("sat_t2a1", [
        sentence("No man likes to acknowledge that he has made a mistake in the choice "
                 "of his profession.",
                 [("subject", 0, 1), ("predicate", 2, 4), ("subject", 6, 6),
                  ("predicate", 7, 8), ("object", 9, 16)]),
        sentence("Every man would rather choose his work freely.",
                 [("subject", 0, 1), ("predicate", 2, 4), ("object", 5, 6),
                  ("adverb", 7, 7)]),
    ]),
    ("sat_t2a2", [
        sentence("Ethics should apply when someone makes an economic decision.",
                 [("subject", 0, 0), ("predicate", 1, 2), ("subject", 4, 4),
                  ("predicate", 5, 5), ("object", 6, 8),
                  ("adjective-of-object", 7, 7)]),
    ]),
    ("sat_t1a1", [
        sentence("Chie sat alone in the kitchen.",
                 [("subject", 0, 0), ("predicate", 1, 1), ("adverb", 2, 5)],
                 entities=[("Chie", "person")]),
        sentence("Then Chie heard her soft scuttling footsteps, the creak of the door.",
                 [("adverb", 0, 0), ("subject", 1, 1), ("predicate", 2, 2),
                  ("object", 3, 12)],
                 entities=[("Chie", "person")]),
    ]),
    ("sat_t1a3", [
        sentence("Scientists showed that the deoxyribonucleic acid molecule might "
                 "duplicate itself.",
                 [("subject", 0, 0), ("predicate", 1, 1), ("subject", 3, 6),
                  ("predicate", 7, 8), ("object", 9, 9)],
                 phrasal=["deoxyribonucleic acid"]),
    ]),
    ("sat_t1a5", [
        sentence("Deep Space Industries of Virginia hopes to be harvesting metals from "
                 "asteroids by 2020.",
                 [("subject", 0, 4), ("predicate", 5, 8), ("object", 9, 11),
                  ("adverb", 12, 13)],
                 entities=[("Deep Space Industries", "organization"),
                           ("Virginia", "location")]),
    ]),
    ("sat_t2a3", [
        sentence("A British study examined the way women search for medical information "
                 "online.",
                 [("subject", 0, 2), ("predicate", 3, 3), ("object", 4, 12)]),
        sentence("An experienced Internet user can, at least in some cases, assess the "
                 "trustworthiness and probable value of a Web page in a matter of seconds.",
                 [("subject", 0, 3), ("adjective-of-subject", 1, 1), ("predicate", 4, 4),
                  ("adverb", 6, 10), ("predicate", 12, 12), ("object", 13, 21),
                  ("adverb", 22, 26)]),
    ]),
    ("sat_t2a4", [
        sentence("A woman knows the cost of life better than a man does.",
                 [("subject", 0, 1), ("predicate", 2, 2), ("object", 3, 6),
                  ("adverb", 7, 10)]),
    ]),
    ("sat_t2a5", [
        sentence("Their insights are subject to egocentrism, social projection, and "
                 "multiple attribution errors.",
                 [("subject", 0, 1), ("predicate", 2, 4), ("object", 5, 14)],
                 pos_override={"subject": "adjective"}),
    ]),
    ("weekly_market", [
        sentence("The farmers market opens every Friday in the town square.",
                 [("subject", 0, 2), ("predicate", 3, 3), ("adverb", 4, 5),
                  ("adverb", 6, 9)]),
    ]),
    ("city_trip", [
        sentence("Maria moved from Boston to New York last spring.",
                 [("subject", 0, 0), ("predicate", 1, 1), ("adverb", 2, 6),
                  ("adverb", 7, 8)],
                 entities=[("Maria", "person"), ("Boston", "location"),
                           ("New York", "location")]),
    ]),
]

QAPS = [
    {"article_id": "sat_t2a1", "question": "What does no man like to acknowledge?",
     "answer_text": "that he has made a mistake in the choice of his profession.",
     "answer_sentence": 0, "answer_first_token": 5, "answer_last_token": 17},
    {"article_id": "sat_t2a2", "question": "When should ethics apply?",
     "answer_text": "when someone makes an economic decision."},
    {"article_id": "sat_t1a1", "question": "What did Chie hear?",
     "answer_text": "her soft scuttling footsteps, the creak of the door.",
     "answer_sentence": 1, "answer_first_token": 3, "answer_last_token": 13},
    {"article_id": "sat_t1a3", "question": "Who might duplicate itself?",
     "answer_text": "the deoxyribonucleic acid molecule."},
    {"article_id": "sat_t1a5",
     "question": "When does Deep Space Industries of Virginia hope to be harvesting "
                 "metals from asteroids?",
     "answer_text": "by 2020."},
    {"article_id": "sat_t2a3",
     "question": "What did a British study of the way women search for medical "
                 "information online indicate?",
     "answer_text": "An experienced Internet user can, at least in some cases, assess the "
                    "trustworthiness and probable value of a Web page in a matter of "
                    "seconds."},
    {"article_id": "sat_t2a4", "question": "What does a woman know better than a man?",
     "answer_text": "the cost of life."},
    {"article_id": "sat_t2a5",
     "question": "What are subject to egocentrism, social projection, and multiple "
                 "attribution errors?",
     "answer_text": "their insights."},
    {"article_id": "weekly_market", "question": "When does the farmers market open?",
     "answer_text": "every Friday."},
    {"article_id": "city_trip", "question": "Where did Maria move to?",
     "answer_text": "to New York."},
]

KB = {
    "location": {
        "major-US-cities": ["New York", "Boston", "Philadelphia", "Chicago",
                            "Los Angeles", "San Francisco", "Houston", "Seattle"],
        "US-states": ["Virginia", "Maryland", "Ohio", "Texas", "California"],
        "world-capitals": ["London", "Paris", "Tokyo", "Berlin", "Madrid"],
    },
    "person": {
        "story-characters": ["Chie", "Maria", "Kenji", "Hana", "Tomas"],
        "physicists": ["Albert Einstein", "Marie Curie", "Niels Bohr",
                       "Richard Feynman"],
    },
    "organization": {
        "space-companies": ["Deep Space Industries", "Planetary Resources",
                            "Blue Origin", "SpaceX"],
        "universities": ["Harvard University", "Stanford University",
                         "Yale University", "Princeton University"],
    },
}

# anchor -> [(neighbour, cosine)]. Words filtered downstream are kept to
# exercise the filters; values above 0.85 or below 0.6 sit outside the
# default interval.
NEIGHBOURS = {
    "choice": [("way", 0.72), ("selection", 0.91), ("option", 0.52)],
    "profession": [("association", 0.66), ("engineering", 0.63), ("occupation", 0.9)],
    "decision": [("request", 0.7), ("proposition", 0.68), ("decisions", 0.88)],
    "economic": [("political", 0.75), ("economical", 0.83), ("fiscal", 0.55)],
    "creak": [("knock", 0.7), ("creaking", 0.8)],
    "door": [("driveway", 0.67), ("stairwell", 0.64), ("doors", 0.8), ("gate", 0.88)],
    "molecule": [("coenzyme", 0.7), ("polymer", 0.66), ("trimer", 0.62),
                 ("molecules", 0.82)],
    "Internet": [("Supernet", 0.7), ("CogNet", 0.65), ("web", 0.9)],
    "experienced": [("inexperienced", 0.78), ("seasoned", 0.7)],
    "cost": [("risk", 0.7), ("costs", 0.8), ("price", 0.9)],
    "life": [("happiness", 0.72), ("experience", 0.66), ("lives", 0.88)],
    "insights": [("perspectives", 0.7), ("findings", 0.68), ("valuables", 0.62),
                 ("observations", 0.84), ("insight", 0.83)],
    "apple": [("pear", 0.8), ("banana", 0.7)],
    "river": [("stream", 0.78), ("lake", 0.6)],
}
UNRELATED = ["table", "cloud", "violin", "quartz", "harbor"]

GRAPH = {
    "synsets": [
        {"id": "entity.n.01", "pos": "noun", "lemmas": ["entity"], "hypernyms": []},
        {"id": "artifact.n.01", "pos": "noun", "lemmas": ["artifact"],
         "hypernyms": ["entity.n.01"]},
        {"id": "barrier.n.01", "pos": "noun", "lemmas": ["barrier"],
         "hypernyms": ["artifact.n.01"]},
        {"id": "movable_barrier.n.01", "pos": "noun", "lemmas": ["movable_barrier"],
         "hypernyms": ["barrier.n.01"]},
        {"id": "door.n.01", "pos": "noun", "lemmas": ["door"],
         "hypernyms": ["movable_barrier.n.01"]},
        {"id": "gate.n.01", "pos": "noun", "lemmas": ["gate"],
         "hypernyms": ["movable_barrier.n.01"]},
        {"id": "organism.n.01", "pos": "noun", "lemmas": ["organism"],
         "hypernyms": ["entity.n.01"]},
        {"id": "animal.n.01", "pos": "noun", "lemmas": ["animal", "beast"],
         "hypernyms": ["organism.n.01"]},
        {"id": "carnivore.n.01", "pos": "noun", "lemmas": ["carnivore"],
         "hypernyms": ["animal.n.01"]},
        {"id": "canine.n.01", "pos": "noun", "lemmas": ["canine"],
         "hypernyms": ["carnivore.n.01"]},
        {"id": "feline.n.01", "pos": "noun", "lemmas": ["feline"],
         "hypernyms": ["carnivore.n.01"]},
        {"id": "dog.n.01", "pos": "noun", "lemmas": ["dog", "domestic_dog"],
         "hypernyms": ["canine.n.01"]},
        {"id": "wolf.n.01", "pos": "noun", "lemmas": ["wolf"],
         "hypernyms": ["canine.n.01"]},
        {"id": "cat.n.01", "pos": "noun", "lemmas": ["cat"],
         "hypernyms": ["feline.n.01"]},
        {"id": "experienced.a.01", "pos": "adjective", "lemmas": ["experienced"],
         "hypernyms": []},
        {"id": "inexperienced.a.01", "pos": "adjective", "lemmas": ["inexperienced"],
         "hypernyms": []},
    ],
    "antonyms": [["experienced", "inexperienced"]],
}


def build_vectors():
    words = []
    for anchor, neighbours in NEIGHBOURS.items():
        words.append(anchor)
        words.extend(w for w, _ in neighbours)
    words.extend(UNRELATED)
    dim = len(words)
    index = {w: i for i, w in enumerate(words)}
    rows = {}
    for anchor, neighbours in NEIGHBOURS.items():
        v = [0.0] * dim
        v[index[anchor]] = 1.0
        rows[anchor] = v
        for w, s in neighbours:
            v = [0.0] * dim
            v[index[anchor]] = s
            v[index[w]] = math.sqrt(1.0 - s * s)
            rows[w] = v
    for w in UNRELATED:
        v = [0.0] * dim
        v[index[w]] = 1.0
        rows[w] = v
    lines = [f"{len(words)} {dim}"]
    for w in words:
        lines.append(w + " " + " ".join(f"{x:.6f}" for x in rows[w]))
    return "\n".join(lines) + "\n"


def eval_fixture():
    """101 MCQs: 7 non-relevant distractors (MCQs 0-6), 9 ungrammatical ones
    (MCQs 7-15), 5 relevant but not sufficient (MCQs 20-24)."""
    mcqs, labels = [], []
    for i in range(101):
        q = f"Which statement about passage {i // 10 + 1} is true (item {i})?"
        answer = f"the statement numbered {i}."
        mcqs.append({"article_id": f"eval_{i // 10}", "question": q, "answer": answer,
                     "distractors": [f"the statement numbered {i}{s}." for s in "abc"],
                     "provenance": []})
        ls = [{"grammatical": True, "relevant_with_distraction": True,
               "sufficient_distraction": True} for _ in range(3)]
        if i <= 6:
            ls[0]["relevant_with_distraction"] = False
            ls[0]["sufficient_distraction"] = False
        elif i <= 15:
            ls[1]["grammatical"] = False
        elif 20 <= i <= 24:
            ls[2]["sufficient_distraction"] = False
        labels.append({"question": q, "labels": ls})
    return mcqs, labels


def jsonl(rows):
    return "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in rows)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    articles = []
    for article_id, sentences in ARTICLES:
        articles.append({"article_id": article_id})
        articles.extend(sentences)
    (OUT / "articles.jsonl").write_text(jsonl(articles))
    for article_id, sentences in ARTICLES:
        (OUT / f"{article_id}.jsonl").write_text(jsonl([{"article_id": article_id}] + sentences))
    (OUT / "qaps.jsonl").write_text(jsonl(QAPS))
    (OUT / "kb.json").write_text(json.dumps(KB, indent=2) + "\n")
    (OUT / "lexgraph.json").write_text(json.dumps(GRAPH, indent=2) + "\n")
    (OUT / "vectors.txt").write_text(build_vectors())
    mcqs, labels = eval_fixture()
    (OUT / "eval_mcqs.jsonl").write_text(jsonl(mcqs))
    (OUT / "eval_labels.jsonl").write_text(jsonl(labels))


if __name__ == "__main__":
    main()

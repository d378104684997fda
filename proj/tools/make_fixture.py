#!/usr/bin/env python3
# Copyright 2026 The mapcompare Authors.
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
"""Writes the bundled synthetic fixture files to fixtures/.

400 documents, 4 planted topics, 4 planted citation communities of 100
documents each. A document's dominant topic equals its community's topic
with probability 0.5. In-field shares per community are roughly 50%, 30%,
15% and 4%.
"""

import argparse
import json
import os
import random

TOPICS = [
    ["heart failure", "ejection fraction", "cardiomyopathy", "diuretic",
     "ventricle", "natriuretic peptide", "congestion", "dyspnea",
     "heart failure diastolic", "remodeling", "hospitalization", "sacubitril"],
    ["atrial fibrillation", "arrhythmia", "ablation", "anticoagulation",
     "warfarin", "pacemaker", "electrocardiogram", "tachycardia",
     "sinus rhythm", "catheter", "apixaban", "conduction"],
    ["hypertension", "blood pressure", "sodium", "kidney", "renin",
     "angiotensin", "diet", "obesity", "salt", "lifestyle", "amlodipine",
     "vascular stiffness"],
    ["myocardial infarction", "coronary artery", "stent", "angioplasty",
     "troponin", "thrombosis", "statin", "cholesterol", "atherosclerosis",
     "plaque", "revascularization", "aspirin"],
]
BACKGROUND = ["patients", "study", "results", "cohort", "outcome", "analysis"]
IN_FIELD_SHARE = [0.50, 0.30, 0.15, 0.04]

THESAURUS = [
    ("CV", "", "Cardiovascular disease"),
    ("CV.HD", "CV", "Heart disease"),
    ("CV.HD.HF", "CV.HD", "Heart failure"),
    ("CV.HD.HF.D", "CV.HD.HF", "Heart Failure, Diastolic"),
    ("CV.HD.CM", "CV.HD", "Cardiomyopathy"),
    ("CV.HD.AR", "CV.HD", "Arrhythmia"),
    ("CV.HD.AR.AF", "CV.HD.AR", "Atrial fibrillation"),
    ("CV.HD.AR.TC", "CV.HD.AR", "Tachycardia"),
    ("CV.HD.MI", "CV.HD", "Myocardial infarction"),
    ("CV.VD", "CV", "Vascular disease"),
    ("CV.VD.HT", "CV.VD", "Hypertension"),
    ("CV.VD.AS", "CV.VD", "Atherosclerosis"),
    ("CV.VD.TH", "CV.VD", "Thrombosis"),
    ("CV.VD.CA", "CV.VD", "Coronary artery"),
    ("CV.PR", "CV", "Cardiovascular procedure"),
    ("CV.PR.AB", "CV.PR", "Ablation"),
    ("CV.PR.AP", "CV.PR", "Angioplasty"),
    ("CV.PR.ST", "CV.PR", "Stent"),
    ("CV.PR.PM", "CV.PR", "Pacemaker"),
    ("CV.DX", "CV", "Diagnosis"),
    ("CV.DX.ECG", "CV.DX", "Electrocardiogram"),
    ("CV.DX.EF", "CV.DX", "Ejection fraction"),
    ("CV.DX.BP", "CV.DX", "Blood pressure"),
]

CONFIG = """\
# Synthetic 400-document fixture. Default parameters scaled down to four topics.
paths:
  corpus: corpus.jsonl
  thesaurus: thesaurus.tsv
  stopwords: ../data/stopwords_en.txt
  output: out
corpus:
  noun_mode: accept_all
  max_doc_share: 0.95
  drop_top_k: 2
lda:
  k: 4
  beta: 0.1
  iterations: 500
  seed: 1
cluster:
  resolutions: [0.005, 0.02, 0.05]
  min_cluster_size: 10
  field_share: 0.10
  group_resolution: 0.9
  group_min_size: 1
  seed: 1
crossmap:
  tct: 0.2
  ttc: 0.1
serve:
  bind: 127.0.0.1
  port: 8080
"""


def words(rng, vocab, count):
  return [rng.choice(vocab) for _ in range(count)]


def main():
  parser = argparse.ArgumentParser(description=__doc__)
  parser.add_argument("--out", default=os.path.join(
      os.path.dirname(os.path.abspath(__file__)), "..", "fixtures"))
  parser.add_argument("--seed", type=int, default=20240601)
  args = parser.parse_args()
  rng = random.Random(args.seed)

  docs = []
  per_community = 100
  for i in range(4 * per_community):
    community = i // per_community
    if rng.random() < 0.5:
      topic = community
    else:
      topic = rng.choice([t for t in range(4) if t != community])
    other = rng.choice([t for t in range(4) if t != topic])
    title = words(rng, TOPICS[topic], 4)
    body = (words(rng, TOPICS[topic], 28) + words(rng, TOPICS[other], 6) +
            words(rng, BACKGROUND, 8))
    rng.shuffle(body)
    docs.append({
        "id": "D%03d" % i,
        "title": " ".join(title).capitalize(),
        "abstract": " ".join(body) + ".",
        "references": [],
        "in_field": rng.random() < IN_FIELD_SHARE[community],
        "year": 2010 + rng.randrange(12),
    })

  for i, doc in enumerate(docs):
    community = i // per_community
    base = community * per_community
    refs = set()
    for _ in range(6):
      j = base + rng.randrange(per_community)
      if j != i:
        refs.add(j)
    if rng.random() < 0.3:
      refs.add(rng.randrange(len(docs)))
    refs.discard(i)
    if rng.random() < 0.1:
      doc["references"].append("EXT%04d" % rng.randrange(10000))
    doc["references"] += ["D%03d" % j for j in sorted(refs)]

  os.makedirs(args.out, exist_ok=True)
  with open(os.path.join(args.out, "corpus.jsonl"), "w") as f:
    for doc in docs:
      f.write(json.dumps(doc, sort_keys=True) + "\n")
  with open(os.path.join(args.out, "thesaurus.tsv"), "w") as f:
    f.write("# node_id\tparent_id\tlabel\n")
    for row in THESAURUS:
      f.write("\t".join(row) + "\n")
  with open(os.path.join(args.out, "config.yaml"), "w") as f:
    f.write(CONFIG)


if __name__ == "__main__":
  main()

"""Generate a synthetic community-structured bibliography for demos and tests.

Writes ``bib.jsonl``, ``affiliations.jsonl`` and ``roster.txt`` into the
output directory. Authors belong to groups (think labs); most papers stay
inside one group, a few bridge two groups, and a handful of authors form
small detached clusters so the graph has several components.
"""

import argparse
import json
import random
from pathlib import Path

FIRST = ["Ana", "Ben", "Chen", "Dana", "Eli", "Fatima", "Goran", "Hana", "Ivan", "Jun", "Kofi", "Lena",
         "Mateo", "Nia", "Omar", "Priya", "Quinn", "Rosa", "Sven", "Tariq", "Uma", "Viktor", "Wen", "Yusuf"]
LAST = ["Abe", "Brandt", "Costa", "Dubois", "Eriksen", "Fox", "Garcia", "Huang", "Ito", "Jansen", "Kim",
        "Lopez", "Muller", "Nakamura", "Okafor", "Petrov", "Rossi", "Silva", "Tanaka", "Novak"]
COUNTRIES = ["us", "us", "us", "uk", "de", "jp", "br", "nz"]
VENUES = ["ADL", "DL", "JCDL"]


def generate(seed=7, groups=8, group_size=9, papers=140, loners=6):
    rng = random.Random(seed)
    names = [f"{f} {l}" for f in FIRST for l in LAST]
    rng.shuffle(names)
    members = [names[g * group_size:(g + 1) * group_size] for g in range(groups)]
    country = {}
    for g, team in enumerate(members):
        home = COUNTRIES[g % len(COUNTRIES)]
        for a in team:
            country[a] = home if rng.random() < 0.85 else rng.choice(COUNTRIES)
    spare = names[groups * group_size:]

    records = []
    for k in range(papers):
        g = rng.randrange(groups)
        team = members[g]
        # lab heads (first two members) appear on most papers
        size = min(len(team) - 1, 1 + int(rng.expovariate(0.6)))
        byline = rng.sample(team[:2], 1) + rng.sample(team[2:], max(0, size - 1))
        if rng.random() < 0.12:
            other = members[(g + rng.randrange(1, groups)) % groups]
            byline.append(other[0])
        records.append({
            "id": f"p{k:04d}",
            "year": 1994 + k * 11 // papers,
            "venue": VENUES[k % len(VENUES)],
            "authors": list(dict.fromkeys(byline)),
        })
    # detached pairs and singletons
    for k in range(loners):
        byline = spare[2 * k:2 * k + 2] if k % 2 else spare[2 * k:2 * k + 1]
        records.append({"id": f"x{k:03d}", "year": 2000 + k, "venue": "JCDL", "authors": byline})
        for a in byline:
            country.setdefault(a, rng.choice(COUNTRIES + [None]))

    authors = sorted({a for r in records for a in r["authors"]})
    affiliations = [{"author": a, "country": country[a], "affiliation": f"Lab {a[-3:]}"}
                    for a in authors if country.get(a)]
    roster = sorted({team[0] for team in members} | set(rng.sample(authors, 6)))
    return records, affiliations, roster


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--papers", type=int, default=140)
    args = p.parse_args()

    records, affiliations, roster = generate(args.seed, papers=args.papers)
    args.out.mkdir(parents=True, exist_ok=True)
    with open(args.out / "bib.jsonl", "w", encoding="utf-8") as fh:
        fh.writelines(json.dumps(r, ensure_ascii=False) + "\n" for r in records)
    with open(args.out / "affiliations.jsonl", "w", encoding="utf-8") as fh:
        fh.writelines(json.dumps(r, ensure_ascii=False) + "\n" for r in affiliations)
    with open(args.out / "roster.txt", "w", encoding="utf-8") as fh:
        fh.write("# synthetic program committee\n")
        fh.writelines(f"{n}\n" for n in roster)
    print(f"{len(records)} publications, {len({a for r in records for a in r['authors']})} authors -> {args.out}")


if __name__ == "__main__":
    main()

"""Seeded corpus of malformed documents for the command-line front end."""

import random
import re

SEEDS = [
    "orbitspace4 { sphere a=1\narc b'=0 seifert=(2,1) b''=-1 }",
    "orbitspace4 {\n  sphere a=0\n  point b=+1\n  point b=-1\n}\n",
    "orbitspace4 { sphere a=2 sphere a=-2 }",
    "orbitspace4 { sphere a=0 circle seifert=(2,1),(3,1) }",
    "seifert3 { b=0 eps=o g=0 hbar=2 t=0 }",
    "seifert3 { b=0 eps=o g=0 hbar=1 t=0 seifert=(2,1),(2,1) }",
    "seifert3 { b=0 eps=n g=1 hbar=1 t=0 }",
    "matrix { n=2 rows=0 1 / 1 0 }",
    "matrix { n=3 rows=1 1 0\n1 2 1\n0 1 3 }",
    "config { fix=s2+2pt arc=[0;(2,1);-1] }",
    "config { fix=s2+2pt signs=+1,-1 }",
    "config { fix=s2+s2 omega=3 }",
    "config { fix=s2+pt sign=-1 }",
    "config { fix=s2 }",
]

_ALPHABET = list("{}()[],;/=#+-'\n \t0123456789") + ["sphere", "arc", "b''", "seifert", "rows", "n=",
                                                  "fix=", "eps=", "\x00", "é", "99999999999"]
COMMANDS = ["validate", "classify3", "classify4", "plumb", "reduce"]
_FITS = {"orbitspace4": ["validate", "classify4", "plumb"], "seifert3": ["validate", "classify3"],
         "matrix": ["validate", "reduce"], "config": ["validate", "classify4", "plumb"]}


def _mutate(rng, text):
    chars = list(text)
    for _ in range(rng.randint(1, 4)):
        op = rng.randrange(5)
        pos = rng.randrange(len(chars) + 1)
        if op == 0 and chars:
            del chars[min(pos, len(chars) - 1)]
        elif op == 1:
            chars.insert(pos, rng.choice(_ALPHABET))
        elif op == 2 and chars:
            chars[min(pos, len(chars) - 1)] = rng.choice(_ALPHABET)
        elif op == 3:
            chars = chars[:pos]
        else:
            i, j = sorted(rng.randrange(len(chars) + 1) for _ in range(2))
            chars = chars[:i] + chars[i:j][::-1] + chars[j:]
    return "".join(chars)


def _swap_numbers(rng, text):
    # syntactically valid but semantically hostile values
    pick = lambda m: str(rng.choice([rng.randint(-12, 12), rng.randint(-10**6, 10**6), 0, 1, -1, 2]))
    return re.sub(r"(?<![A-Za-z0-9+])[-+]?\d+(?![A-Za-z])", lambda m: pick(m) if rng.random() < 0.5 else m.group(), text)


def corpus(size=1000, seed=20240611):
    """``size`` pairs ``(command, bytes)``, deterministic for a given seed."""
    rng = random.Random(seed)
    out = []
    while len(out) < size:
        kind = rng.random()
        seed_doc = rng.choice(SEEDS)
        command = rng.choice(COMMANDS)
        if kind < 0.4:
            data = _swap_numbers(rng, seed_doc).encode("utf-8")
            command = rng.choice(_FITS[seed_doc.split()[0]])
        elif kind < 0.85:
            data = _mutate(rng, seed_doc).encode("utf-8")
        elif kind < 0.95:
            data = bytes(rng.randrange(256) for _ in range(rng.randint(0, 40)))
        else:
            data = seed_doc.encode("utf-8")[: rng.randint(0, 20)]
        out.append((command, data))
    return out

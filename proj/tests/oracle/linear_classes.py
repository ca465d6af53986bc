"""Independent enumeration of embedding classes of linear lattices.

Builds classes level by level, keeping one canonical matrix per orbit of
signed coordinate permutations, and compares the result with the output of
`ratball lattice classes`.
"""

import argparse
import json
import math
import subprocess
import sys

CASES = [
    ("2,2,2", 4),
    ("2,2,2", 7),
    ("3,2,2,3", 8),
    ("3,2,2,3,2", 8),
    ("3,2,2,3,2", 9),
    ("3,3,2,2,3,3,2", 12),
    ("2,3,2,2,3", 7),
    ("4,4,4", 5),
]


def vectors(norm, m):
    out = []

    def rec(i, rest, cur):
        if i == m:
            if rest == 0:
                out.append(tuple(cur))
            return
        r = math.isqrt(rest)
        for v in range(-r, r + 1):
            cur.append(v)
            rec(i + 1, rest - v * v, cur)
            cur.pop()

    rec(0, norm, [])
    return out


def canonical(rows):
    cols = []
    for c in zip(*rows):
        nz = [x for x in c if x]
        if nz and nz[0] < 0:
            c = tuple(-x for x in c)
        cols.append(tuple(c))
    cols.sort(reverse=True)
    return tuple(zip(*cols))


def classes(weights, m):
    pool = {w: vectors(w, m) for w in set(weights)}
    level = {canonical([v]) for v in pool[weights[0]]}
    for i in range(1, len(weights)):
        nxt = set()
        for rows in level:
            for v in pool[weights[i]]:
                if all(
                    sum(a * b for a, b in zip(v, r)) == (-1 if j == i - 1 else 0)
                    for j, r in enumerate(rows)
                ):
                    nxt.add(canonical(list(rows) + [v]))
        level = nxt
    return level


def from_cli(binary, weights, m):
    out = subprocess.run(
        [binary, "--format", "json", "lattice", "classes", "--weights", weights, "--ambient", str(m)],
        check=True,
        capture_output=True,
        text=True,
    ).stdout
    result = json.loads(out)["result"]
    return {
        tuple(tuple(int(x) for x in row) for row in cls)
        for cls in (c["embedding"] for c in result["classes"])
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("binary", help="path to the ratball executable")
    args = parser.parse_args()

    failed = False
    for weights, m in CASES:
        expected = classes([int(w) for w in weights.split(",")], m)
        got = from_cli(args.binary, weights, m)
        status = "ok" if got == expected else "MISMATCH"
        failed |= got != expected
        print(f"({weights}) in Z^{m}: oracle {len(expected)}, ratball {len(got)} {status}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

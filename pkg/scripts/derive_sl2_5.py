"""Derive the SL(2,5) corpus file.

SL(2,5) acts faithfully on the 24 nonzero vectors of GF(5)^2. This script
enumerates every 2x2 matrix over GF(5) with determinant 1, checks that the
two generators below close to exactly that set, and writes the generators as
permutations of the vectors (ordered lexicographically) in the ``perm``
group-file format.

    python scripts/derive_sl2_5.py > src/cdlab/corpus/sl2_5.txt
"""

import itertools
import sys

P = 5
GENERATORS = {
    "T = [[1,1],[0,1]]": ((1, 1), (0, 1)),
    "S = [[0,-1],[1,0]]": ((0, P - 1), (1, 0)),
}


def matmul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) % P for j in range(2)) for i in range(2)
    )


def det(m):
    return (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % P


def all_sl2():
    out = set()
    for a, b, c, d in itertools.product(range(P), repeat=4):
        m = ((a, b), (c, d))
        if det(m) == 1:
            out.add(m)
    return out


def matrix_closure(gens):
    identity = ((1, 0), (0, 1))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = matmul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def vectors():
    return [v for v in itertools.product(range(P), repeat=2) if v != (0, 0)]


def as_permutation(m, vecs):
    index = {v: i for i, v in enumerate(vecs)}
    return [index[tuple(sum(m[i][k] * v[k] for k in range(2)) % P for i in range(2))] for v in vecs]


def main(out=sys.stdout):
    full = all_sl2()
    generated = matrix_closure(list(GENERATORS.values()))
    if len(full) != 120 or generated != full:
        raise SystemExit(f"closure mismatch: {len(generated)} generated, {len(full)} with det 1")
    vecs = vectors()
    print("# SL(2,5) acting on the 24 nonzero vectors of GF(5)^2", file=out)
    print("# produced by scripts/derive_sl2_5.py; vectors in lexicographic order:", file=out)
    print("# " + " ".join(f"{a}{b}" for a, b in vecs), file=out)
    print(f"# generators: {', '.join(GENERATORS)}; order 120", file=out)
    print(f"perm {len(vecs)}", file=out)
    for m in GENERATORS.values():
        print(" ".join(map(str, as_permutation(m, vecs))), file=out)


if __name__ == "__main__":
    main()

"""Reference values computed with SymPy and pinned into the C++ tests.

Run: python3 tests/oracles/sympy_oracles.py
"""
import itertools

from sympy import Matrix, groebner, symbols


def generic(m, n):
    xs = {(i, j): symbols(f"x{i}{j}") for i in range(1, m + 1) for j in range(1, n + 1)}
    ys = [symbols(f"y{j}") for j in range(1, n + 1)]
    X = Matrix(m, n, lambda i, j: xs[(i + 1, j + 1)])
    q = [sum(X[i, j] * ys[j] for j in range(n)) for i in range(m)]
    minors = [X.extract(list(r), list(range(n))).det() for r in itertools.combinations(range(m), n)]
    # Descending variable order: x by row-major descending, then y descending.
    gens = sorted(xs.values(), key=lambda s: str(s), reverse=True) + list(reversed(ys))
    return xs, ys, q, minors, gens


def ri_basis(m, n):
    xs, ys, q, minors, gens = generic(m, n)
    return groebner(q + minors, *gens, order="grevlex")


if __name__ == "__main__":
    g = ri_basis(2, 2)
    print("RI(2,2) grevlex reduced basis:")
    for p in g.exprs:
        print("  ", p)


def radical_member(f, gens, variables):
    t = symbols("t_slack")
    g = groebner(list(gens) + [1 - t * f], *variables, t, order="grevlex")
    return g.exprs == [1]


def hsop_3_2():
    xs, ys, q, minors, gens = generic(3, 2)
    m12, m13, m23 = minors
    return [q[0], q[1], q[2] + m12, m13, m23], minors, gens, q


def colon_2_2():
    from sympy import simplify
    xs, ys, q, minors, gens = generic(2, 2)
    t = symbols("t_slack")
    # (Q1,Q2):(y1) ∩ (Q1,Q2):(y2) by elimination.
    def colon_by(g):
        I = [t * p for p in q] + [(1 - t) * g]
        G = groebner(I, t, *gens, order="lex")
        inter = [p for p in G.exprs if not p.has(t)]
        return [simplify(p / g) for p in inter]
    c1, c2 = colon_by(ys[0]), colon_by(ys[1])
    I = [t * p for p in c1] + [(1 - t) * p for p in c2]
    G = groebner(I, t, *gens, order="lex")
    res = [p for p in G.exprs if not p.has(t)]
    target = groebner(q + minors, *gens, order="grevlex")
    return groebner(res, *gens, order="grevlex").exprs == target.exprs


def dimension(m, n):
    """Krull dimension of R/RI(m, n) from the SymPy grevlex initial ideal."""
    from itertools import combinations
    xs, ys, q, minors, gens = generic(m, n)
    G = groebner(q + minors, *gens, order="grevlex")
    from sympy import Poly
    sup = []
    for p in G.exprs:
        lm = Poly(p, *gens).monoms(order="grevlex")[0]
        sup.append({gens[k] for k, e in enumerate(lm) if e})
    for size in range(len(gens), -1, -1):
        for U in combinations(gens, size):
            if all(not s <= set(U) for s in sup):
                return size
    return -1


if __name__ == "__main__":
    hsop, minors, gens, q = hsop_3_2()
    print("[1,2] in rad(hsop(3,2)):", radical_member(minors[0], hsop, gens))
    print("(Q1,Q2):(y1,y2) == RI(2,2):", colon_2_2())
    for m, n in [(2, 2), (3, 2), (3, 3), (4, 2)]:
        print(f"dim R/RI({m},{n}) =", dimension(m, n))


def rank_sum_hsop(m, n):
    """Rank sums of B, with ranks computed here by longest path."""
    import itertools as it
    labels = [("Q", i) for i in range(1, m + 1)] + [("M", r) for r in it.combinations(range(1, m + 1), n)]

    def leq(a, b):
        if a[0] == "Q" and b[0] == "Q":
            return a[1] <= b[1]
        if a[0] == "Q":
            return a[1] <= b[1][-1]
        if b[0] == "Q":
            return False
        return all(x <= y for x, y in zip(a[1], b[1]))

    rank = {}
    for lab in sorted(labels, key=lambda l: sum(leq(o, l) for o in labels)):
        rank[lab] = 1 + max([rank[o] for o in labels if o != lab and leq(o, lab)], default=0)
    xs, ys, q, minors, gens = generic(m, n)
    poly = {("Q", i + 1): q[i] for i in range(m)}
    for r, mn in zip(it.combinations(range(1, m + 1), n), minors):
        poly[("M", r)] = mn
    classes = {}
    for lab in labels:
        classes.setdefault(rank[lab], []).append(poly[lab])
    return [sum(classes[k]) for k in sorted(classes)], list(poly.values()), gens


def witness_check(m, n):
    h, all_gens, gens = rank_sum_hsop(m, n)
    return all(radical_member(g, h, gens) for g in all_gens), len(h)


if __name__ == "__main__":
    import sys
    for m, n in [(3, 2), (4, 2), (3, 3)]:
        print(f"rad(hsop({m},{n})) contains RI:", witness_check(m, n))
        sys.stdout.flush()

#!/usr/bin/env python3
"""Brute-force oracle for the expected values frozen into the C++ tests.

Independent of the C++ implementation: projectivity and crossings are
computed straight from their definitions, derivations by exhaustive search
over arc-standard action sequences.
"""
from itertools import product, combinations


def valid(heads):
    n = len(heads)
    if sum(1 for h in heads if h == 0) != 1:
        return False
    for i in range(1, n + 1):
        v, hops = i, 0
        while v != 0 and hops <= n:
            v, hops = heads[v - 1], hops + 1
        if v != 0:
            return False
    return all(heads[i - 1] != i for i in range(1, n + 1))


def descendants(heads, h):
    n = len(heads)
    out = set()
    for v in range(1, n + 1):
        u = v
        while u != 0:
            if u == h:
                out.add(v)
                break
            u = heads[u - 1]
        if h == 0:
            out.add(v)
    return out


def projective(heads):
    for d in range(1, len(heads) + 1):
        h = heads[d - 1]
        desc = descendants(heads, h)
        for k in range(min(h, d) + 1, max(h, d)):
            if k not in desc:
                return False
    return True


def crossings(heads):
    spans = sorted((min(h, d), max(h, d)) for d, h in enumerate(heads, 1))
    return [(a, b) for a, b in combinations(spans, 2)
            if a[0] < b[0] < a[1] < b[1] or b[0] < a[0] < b[1] < a[1]]


def derivations(heads):
    """All arc-standard action sequences whose arcs equal `heads`."""
    n = len(heads)
    out = []

    def go(stack, nxt, arcs, seq):
        if nxt > n and stack == [0]:
            if arcs == {(heads[d - 1], d) for d in range(1, n + 1)}:
                out.append(seq)
            return
        if nxt <= n:
            go(stack + [nxt], nxt + 1, arcs, seq + ["SHIFT"])
        if len(stack) >= 2:
            i, j = stack[-2], stack[-1]
            if i != 0 and (j, i) in gold:
                go(stack[:-2] + [j], nxt, arcs | {(j, i)}, seq + ["LEFTARC"])
            if (i, j) in gold and (i != 0 or nxt > n):
                go(stack[:-1], nxt, arcs | {(i, j)}, seq + ["RIGHTARC"])

    gold = {(heads[d - 1], d) for d in range(1, n + 1)}
    go([0], 1, frozenset(), [])
    return out


def main():
    ex = [3, 4, 0, 3]
    print("n=4 example projective:", projective(ex))
    print("n=4 example crossing pairs:", crossings(ex))

    for n in range(1, 7):
        trees = [h for h in product(range(n + 1), repeat=n) if valid(h)]
        nproj = sum(projective(list(t)) for t in trees)
        agree = all(projective(list(t)) == (not crossings(list(t))) for t in trees)
        print(f"n={n}: trees={len(trees)} projective={nproj} definitions-agree={agree}")

    print("n=2 trees:", [h for h in product(range(3), repeat=2) if valid(h)])
    print("n=3 chain derivations:", derivations([2, 0, 2]))
    fig1 = [0, 1, 5, 5, 1]
    print("figure 1 derivations:", len(derivations(fig1)))
    for d in derivations(fig1):
        print("  ", d)

    # Lifting: all single reattachments of the non-projective dependent to
    # an ancestor of its head, keeping only projective results.
    base = [3, 4, 0, 3]
    nonproj = [d for d in range(1, 5)
               if any(k not in descendants(base, base[d - 1])
                      for k in range(min(base[d - 1], d) + 1, max(base[d - 1], d)))]
    print("non-projective dependents:", nonproj)
    for d in nonproj:
        h = base[d - 1]
        anc = []
        u = h
        while u != 0:
            u = base[u - 1]
            anc.append(u)
        for a in anc:
            t = list(base)
            t[d - 1] = a
            if valid(t) and projective(t):
                print(f"  minimal lift of {d}: head {h} -> {a}: {t}")
                break


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Regenerates data/groups/*.json and data/tables/*.json.

Class sizes and cycle types are found by brute force from the generators;
character values come from the usual formulas for each family.
"""
import cmath
import itertools
import json
import math
import os
import re
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.normpath(os.path.join(HERE, "..", "..", "data"))


def compose(a, b):
    # (a*b)(x) = a(b(x)), 0-based tuples
    return tuple(a[b[x]] for x in range(len(a)))


def inverse(a):
    inv = [0] * len(a)
    for x, y in enumerate(a):
        inv[y] = x
    return tuple(inv)


def closure(gens):
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(s, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def cycle_type(a):
    seen = set()
    out = []
    for x in range(len(a)):
        if x in seen:
            continue
        length = 0
        y = x
        while y not in seen:
            seen.add(y)
            y = a[y]
            length += 1
        out.append(length)
    return sorted(out, reverse=True)


def cycles_string(a):
    seen = set()
    parts = []
    for x in range(len(a)):
        if x in seen or a[x] == x:
            seen.add(x)
            continue
        cyc = []
        y = x
        while y not in seen:
            seen.add(y)
            cyc.append(y + 1)
            y = a[y]
        parts.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def from_cycles(n, cycles):
    img = list(range(n))
    for c in cycles:
        for t, x in enumerate(c):
            img[x - 1] = c[(t + 1) % len(c)] - 1
    return tuple(img)


def conj_class(elements, g):
    return {compose(compose(h, g), inverse(h)) for h in elements}


def write(path, doc):
    text = json.dumps(doc, indent=2)
    # keep scalar arrays on one line
    text = re.sub(r"\[\s*([^\[\]{}]*?)\s*\]", lambda m: "[" + re.sub(r"\s*\n\s*", " ", m.group(1)) + "]", text)
    with open(path, "w") as f:
        f.write(text + "\n")


def value(z):
    z = complex(z)
    if abs(z.imag) < 1e-12 and abs(z.real - round(z.real)) < 1e-12:
        return int(round(z.real))
    return [z.real, z.imag]


def table_doc(order, classes, chars, action=None):
    """classes: list of (name, representative); chars: list of (name, f(rep))."""
    doc = {"group_order": order, "classes": [], "irreducibles": []}
    exact = True
    rows = []
    for name, f in chars:
        row = [value(f(rep)) for _, rep, _ in classes]
        exact &= all(isinstance(v, int) for v in row)
        rows.append((name, row))
    for name, rep, size in classes:
        act = action(rep) if action else rep
        doc["classes"].append({"name": name, "size": size, "cycle_type": cycle_type(act)})
    for name, row in rows:
        if not exact:
            row = [v if isinstance(v, list) else [float(v), 0.0] for v in row]
        doc["irreducibles"].append({"name": name, "values": row})
    check(doc)
    return doc


def check(doc):
    def c(v):
        return complex(v[0], v[1]) if isinstance(v, list) else complex(v)

    order = doc["group_order"]
    sizes = [cl["size"] for cl in doc["classes"]]
    assert sum(sizes) == order
    irr = doc["irreducibles"]
    assert len(irr) == len(sizes)
    for a in irr:
        for b in irr:
            s = sum(sz * c(x) * c(y).conjugate() for sz, x, y in zip(sizes, a["values"], b["values"])) / order
            want = 1 if a is b else 0
            assert abs(s - want) < 1e-9, (a["name"], b["name"], s)


def classes_of(elements, reps):
    out = []
    covered = set()
    for name, rep in reps:
        cl = conj_class(elements, rep)
        assert not (cl & covered), name
        covered |= cl
        out.append((name, rep, len(cl)))
    assert covered == elements
    return out


def cyclic(n):
    r = from_cycles(n, [list(range(1, n + 1))])
    elements = closure([r])
    powers = [tuple(range(n))]
    for _ in range(n - 1):
        powers.append(compose(r, powers[-1]))
    classes = classes_of(elements, [(f"r{j}", powers[j]) for j in range(n)])
    index = {p: j for j, p in enumerate(powers)}
    chars = [(f"chi{h}", (lambda h: lambda g: cmath.exp(2j * math.pi * h * index[g] / n))(h)) for h in range(n)]
    group = {"kind": "permutation", "degree": n, "generators": [cycles_string(r)], "order": n}
    return group, table_doc(n, classes, chars)


def dihedral(n):
    r = from_cycles(n, [list(range(1, n + 1))])
    # reflection y -> -y on 0-based points, fixing point 1
    s = tuple((-y) % n for y in range(n))
    elements = closure([r, s])
    rot = [tuple(range(n))]
    for _ in range(n - 1):
        rot.append(compose(r, rot[-1]))
    word = {}
    for j, p in enumerate(rot):
        word[p] = (0, j)
        word[compose(s, p)] = (1, j)
    reps = [("1", rot[0])]
    for j in range(1, n // 2 + 1):
        reps.append((f"r{j}", rot[j]))
    reps.append(("s", s))
    if n % 2 == 0:
        reps.append(("sr", compose(s, r)))
    classes = classes_of(elements, reps)

    def linear(a, b):
        # a = value on r, b = value on s
        return lambda g: (b if word[g][0] else 1) * a ** word[g][1]

    chars = [("1", linear(1, 1)), ("sgn", linear(1, -1))]
    if n % 2 == 0:
        chars += [("eps1", linear(-1, 1)), ("eps2", linear(-1, -1))]
    for h in range(1, (n - 1) // 2 + 1):
        chars.append((f"rho{h}", (lambda h: lambda g: 0 if word[g][0] else 2 * math.cos(2 * math.pi * h * word[g][1] / n))(h)))
    group = {"kind": "permutation", "degree": n, "generators": [cycles_string(r), cycles_string(s)], "order": 2 * n}
    return group, table_doc(2 * n, classes, chars)


def alternating4():
    a = from_cycles(4, [[1, 2, 3]])
    b = from_cycles(4, [[1, 2], [3, 4]])
    elements = closure([a, b])
    classes = classes_of(elements, [("1A", tuple(range(4))), ("2A", b), ("3A", a), ("3B", compose(a, a))])
    w = cmath.exp(2j * math.pi / 3)
    vals = {
        "1": [1, 1, 1, 1],
        "w": [1, 1, w, w * w],
        "w2": [1, 1, w * w, w],
        "3": [3, -1, 0, 0],
    }
    reps = [rep for _, rep, _ in classes]
    chars = [(name, (lambda v: lambda g: v[reps.index(g)])(v)) for name, v in vals.items()]
    group = {"kind": "permutation", "degree": 4, "generators": [cycles_string(a), cycles_string(b)], "order": 12}
    return group, table_doc(12, classes, chars)


def alternating5(on_pairs=False):
    a = from_cycles(5, [[1, 2, 3]])
    b = from_cycles(5, [[1, 2, 3, 4, 5]])
    elements = closure([a, b])
    c5 = b
    classes = classes_of(elements, [
        ("1A", tuple(range(5))),
        ("2A", from_cycles(5, [[1, 2], [3, 4]])),
        ("3A", a),
        ("5A", c5),
        ("5B", compose(c5, c5)),
    ])
    phi = (1 + math.sqrt(5)) / 2
    vals = {
        "1": [1, 1, 1, 1, 1],
        "3a": [3, -1, 0, phi, 1 - phi],
        "3b": [3, -1, 0, 1 - phi, phi],
        "4": [4, 0, 1, -1, -1],
        "5": [5, 1, -1, 0, 0],
    }
    reps = [rep for _, rep, _ in classes]
    chars = [(name, (lambda v: lambda g: v[reps.index(g)])(v)) for name, v in vals.items()]
    if not on_pairs:
        group = {"kind": "permutation", "degree": 5, "generators": [cycles_string(a), cycles_string(b)], "order": 60}
        return group, table_doc(60, classes, chars)

    pairs = list(itertools.combinations(range(5), 2))
    pos = {p: t for t, p in enumerate(pairs)}

    def on_pair(g):
        return tuple(pos[tuple(sorted((g[x], g[y])))] for x, y in pairs)

    group = {"kind": "permutation", "degree": 10, "generators": [cycles_string(on_pair(a)), cycles_string(on_pair(b))],
             "order": 60}
    return group, table_doc(60, classes, chars, action=on_pair)


def symmetric(n):
    gens = [from_cycles(n, [[1, 2]]), from_cycles(n, [list(range(1, n + 1))])]
    return {"kind": "permutation", "degree": n, "generators": [cycles_string(g) for g in gens], "order": math.factorial(n)}


def main():
    groups = os.path.join(DATA, "groups")
    tables = os.path.join(DATA, "tables")
    os.makedirs(groups, exist_ok=True)
    os.makedirs(tables, exist_ok=True)

    built = {}
    for n in (4, 5, 6, 7):
        built[f"c{n}"] = cyclic(n)
    for n in (4, 5, 6):
        built[f"d{n}"] = dihedral(n)
    built["a4"] = alternating4()
    built["a5"] = alternating5()
    built["a5_pairs"] = alternating5(on_pairs=True)
    for name, (group, table) in built.items():
        assert len(closure([from_cycles(group["degree"], parse(c)) for c in group["generators"]])) == group["order"], name
        write(os.path.join(groups, name + ".json"), group)
        write(os.path.join(tables, name + "_table.json"), table)

    for n in (4, 5, 6):
        write(os.path.join(groups, f"s{n}.json"), symmetric(n))
    write(os.path.join(groups, "trivial3.json"), {"kind": "permutation", "degree": 3, "generators": ["()"], "order": 1})
    write(os.path.join(tables, "trivial3_table.json"), {
        "group_order": 1,
        "classes": [{"name": "1A", "size": 1, "cycle_type": [1, 1, 1]}],
        "irreducibles": [{"name": "1", "values": [1]}],
    })
    write(os.path.join(groups, "gl3_2.json"), {
        "kind": "matrix", "n": 3, "q": 2,
        "generators": [[[1, 1, 0], [0, 1, 0], [0, 0, 1]], [[0, 0, 1], [1, 0, 0], [0, 1, 0]]],
        "order": 168,
    })
    return 0


def parse(s):
    if s == "()":
        return []
    return [list(map(int, c.split(","))) for c in s.strip("()").split(")(")]


if __name__ == "__main__":
    sys.exit(main())

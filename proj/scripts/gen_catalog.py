#!/usr/bin/env python3
"""Regenerates core/catalog/*.json (the bundled magma tables)."""
import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "core" / "catalog"


def write(name, labels, mul):
    table = [[labels.index(mul(a, b)) for b in labels] for a in labels]
    (OUT / f"{name}.json").write_text(json.dumps({"elements": labels, "table": table}) + "\n")


def cyclic(n):
    labels = ["e", "a"] + [f"a^{k}" for k in range(2, n)]
    write(f"Z{n}", labels[:n], lambda p, q: labels[(labels.index(p) + labels.index(q)) % n])


def compose(p, q):
    # (p q)(i) = p(q(i))
    return tuple(p[q[i]] for i in range(len(q)))


def perm_group(name, named):
    labels = list(named)
    by_perm = {v: k for k, v in named.items()}
    write(name, labels, lambda a, b: by_perm[compose(named[a], named[b])])


def s3():
    perm_group("S3", {
        "e": (0, 1, 2), "(12)": (1, 0, 2), "(13)": (2, 1, 0),
        "(23)": (0, 2, 1), "(123)": (1, 2, 0), "(132)": (2, 0, 1),
    })


def d4():
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    e = (0, 1, 2, 3)
    named = {}
    rk = e
    for k in range(4):
        named["e" if k == 0 else ("r" if k == 1 else f"r^{k}")] = rk
        rk = compose(r, rk)
    rk = e
    for k in range(4):
        named["s" if k == 0 else ("sr" if k == 1 else f"sr^{k}")] = compose(s, rk)
        rk = compose(r, rk)
    perm_group("D4", named)


def q8():
    # Quaternion units as (sign, unit) with unit in 1, i, j, k.
    units = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
             ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
             ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
             ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1")}
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def split(x):
        return (-1, x[1:]) if x.startswith("-") else (1, x)

    def mul(a, b):
        sa, ua = split(a)
        sb, ub = split(b)
        s, u = units[(ua, ub)]
        s *= sa * sb
        return u if s > 0 else "-" + u

    write("Q8", labels, mul)


def left_zero():
    write("left-zero-2", ["p", "q"], lambda a, b: a)


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    for n in range(2, 9):
        cyclic(n)
    s3()
    d4()
    q8()
    left_zero()

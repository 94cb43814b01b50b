"""Pure-Python Redelmeier growth of fixed polyiamonds.

Reference implementation of the compiled kernel in ``_ckernel.pyx``; both
must visit shapes in the same order and return identical results.

A shape is rooted at its least cell in (row, col) order, placed at (0, 0)
when it is an up-triangle and at (0, 1) otherwise, so growth is confined to
row > 0 or (row == 0 and col >= root_col).  Holes are counted from the Euler
characteristic of the closed shape, h = 1 - V + 2n - b, which only needs the
vertex count V and interior edge count b, both maintained incrementally.
"""
from __future__ import annotations

from .polyiamond import canonical_key


def _neighbors(r, q):
    if (r + q) % 2 == 0:
        return ((r, q - 1), (r, q + 1), (r - 1, q))
    return ((r, q - 1), (r, q + 1), (r + 1, q))


def _vertices(r, q):
    if (r + q) % 2 == 0:
        return ((r, q - 1), (r, q + 1), (r + 1, q))
    return ((r + 1, q - 1), (r + 1, q + 1), (r, q))


def grow(n, root_col, prefix=(), b_budget=-1, target=0, pmin=None, visit=None, keys=None):
    """Visit every fixed n-cell shape whose root is (0, root_col).

    ``prefix[d]`` restricts level ``d`` to its ``prefix[d]``-th choice, which
    carves the search into disjoint tasks.  Branches whose interior edge
    count would exceed ``b_budget`` (when >= 0) are cut.  With ``target`` > 0
    the walk stops at the first shape with exactly that many holes.  When
    ``keys`` is a set, the canonical key of every shape is added to it.

    Returns ``(count, min_b, max_b, max_holes, witness, hist, violations,
    hit)`` where ``hist[h]`` counts shapes with ``h`` holes, ``violations``
    counts shapes with 3h > n + 2 - pmin[n + h], and ``hit`` is the target
    shape or None.
    """
    budget = b_budget if b_budget >= 0 else 3 * n
    root = (0, root_col)
    shape = [root]
    inshape = {root}
    reached = {root}
    vcount = {}
    for v in _vertices(*root):
        vcount[v] = 1
    st = {
        "b": 0, "V": 3, "count": 0, "min_b": -1, "max_b": -1,
        "max_holes": -1, "witness": None, "violations": 0, "hit": None,
    }
    hist = [0] * (n + 1)

    def allowed(c):
        return c[0] > 0 or (c[0] == 0 and c[1] >= root_col)

    def record():
        b = st["b"]
        h = 1 - st["V"] + 2 * n - b
        st["count"] += 1
        hist[h] += 1
        if st["min_b"] < 0 or b < st["min_b"]:
            st["min_b"] = b
        if b > st["max_b"]:
            st["max_b"] = b
        if h > st["max_holes"]:
            st["max_holes"] = h
            st["witness"] = tuple(shape)
        if pmin is not None and 3 * h > n + 2 - pmin[n + h]:
            st["violations"] += 1
        if visit is not None:
            visit(tuple(shape))
        if keys is not None:
            keys.add(canonical_key(shape))
        if target and h == target:
            st["hit"] = tuple(shape)
            return True
        return False

    def rec(untried, depth):
        L = len(untried)
        for idx in range(L - 1, -1, -1):
            if depth < len(prefix):
                t = L - 1 - idx
                if t < prefix[depth]:
                    continue
                if t > prefix[depth]:
                    break
            cell = untried[idx]
            nbs = _neighbors(*cell)
            e = sum(1 for nb in nbs if nb in inshape)
            if st["b"] + e > budget:
                continue
            shape.append(cell)
            inshape.add(cell)
            st["b"] += e
            for v in _vertices(*cell):
                k = vcount.get(v, 0)
                if k == 0:
                    st["V"] += 1
                vcount[v] = k + 1
            stop = False
            if len(shape) == n:
                stop = record()
            else:
                new = [nb for nb in nbs if nb not in reached and allowed(nb)]
                reached.update(new)
                stop = rec(untried[:idx] + new, depth + 1)
                reached.difference_update(new)
            for v in _vertices(*cell):
                k = vcount[v] - 1
                if k == 0:
                    st["V"] -= 1
                vcount[v] = k
            st["b"] -= e
            inshape.discard(cell)
            shape.pop()
            if stop:
                return True
        return False

    if n == 1:
        record()
    else:
        first = [nb for nb in _neighbors(*root) if allowed(nb)]
        reached.update(first)
        rec(first, 0)
    return (st["count"], st["min_b"], st["max_b"], st["max_holes"], st["witness"],
            hist, st["violations"], st["hit"])


def branches(n, root_col, prefix=()):
    """Number of choices open at level ``len(prefix)`` after following ``prefix``.

    Zero when the prefix is infeasible or already completes a shape.
    """
    if len(prefix) >= n - 1:
        return 0
    root = (0, root_col)
    reached = {root}

    def allowed(c):
        return c[0] > 0 or (c[0] == 0 and c[1] >= root_col)

    untried = [nb for nb in _neighbors(*root) if allowed(nb)]
    reached.update(untried)
    for choice in prefix:
        L = len(untried)
        if choice >= L:
            return 0
        idx = L - 1 - choice
        cell = untried[idx]
        new = [nb for nb in _neighbors(*cell) if nb not in reached and allowed(nb)]
        reached.update(new)
        untried = untried[:idx] + new
    return len(untried)

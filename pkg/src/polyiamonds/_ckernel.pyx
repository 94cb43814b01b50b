# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled Redelmeier growth of fixed polyiamonds.

Mirrors ``_pykernel.grow`` cell for cell: same root convention, same choice
order, same pruning, same Euler-characteristic hole count.  Cells live on a
padded array grid; ``idx = (row + 1) * W + col + off``.
"""
from libc.stdlib cimport calloc, free

from .lattice import _matrices

cdef enum:
    MAXN = 48
    MAXU = 2 * MAXN + 8
    CODE = 512

cdef int MATS[12][4]
for _g, ((_p, _q), (_s, _t)) in enumerate(_matrices()):
    MATS[_g][0], MATS[_g][1], MATS[_g][2], MATS[_g][3] = _p, _q, _s, _t


cdef object _canonical(int *rows, int *cols, int size):
    """Least normalized image over the 12 isometries, as in ``canonical_key``."""
    cdef int codes[MAXN]
    cdef int best[MAXN]
    cdef int rs[MAXN]
    cdef int cs[MAXN]
    cdef int g, i, j, r, c, a, b, a2, b2, m, rmin, cmin, x, have = 0, better
    for g in range(12):
        rmin = cmin = 1 << 30
        for i in range(size):
            r = rows[i]
            c = cols[i]
            # exact divisions, so C truncation is harmless
            if ((r + c) & 1) == 0:
                a = (3 * (c - r - 1) - 1) // 2
                b = 3 * r + 1
            else:
                a = (3 * (c - r - 1) - 2) // 2
                b = 3 * r + 2
            a2 = MATS[g][0] * a + MATS[g][1] * b
            b2 = MATS[g][2] * a + MATS[g][3] * b
            m = ((b2 % 3) + 3) % 3
            if m == 1:
                r = (b2 - 1) // 3
                c = (2 * a2 + 1) // 3 + r + 1
            else:
                r = (b2 - 2) // 3
                c = (2 * a2 + 2) // 3 + r + 1
            rs[i] = r
            cs[i] = c
            if r < rmin:
                rmin = r
            if c < cmin:
                cmin = c
        cmin -= (rmin + cmin) & 1
        for i in range(size):
            x = (rs[i] - rmin) * CODE + cs[i] - cmin
            j = i
            while j > 0 and codes[j - 1] > x:
                codes[j] = codes[j - 1]
                j -= 1
            codes[j] = x
        better = not have
        if have:
            for i in range(size):
                if codes[i] != best[i]:
                    better = codes[i] < best[i]
                    break
        if better:
            have = 1
            for i in range(size):
                best[i] = codes[i]
    return tuple([(best[i] // CODE, best[i] % CODE) for i in range(size)])


def canonical_key(cells):
    """Compiled twin of ``polyiamond.canonical_key``."""
    cdef int rows[MAXN]
    cdef int cols[MAXN]
    cdef int i = 0
    if len(cells) > MAXN:
        raise ValueError(f"at most {MAXN} cells")
    for r, c in cells:
        rows[i] = r
        cols[i] = c
        i += 1
    return _canonical(rows, cols, i)


cdef class _Grower:
    cdef int n, W, off, cells, budget, target, nprefix, root_col
    cdef int b, V, size, min_b, max_b, max_holes, stop
    cdef long long count, violations
    cdef char *reached
    cdef char *inshape
    cdef char *up
    cdef int *vcount
    cdef int *shape
    cdef int *untried
    cdef int *prefix
    cdef long long *hist
    cdef int *pmin
    cdef int have_pmin
    cdef object visit, keys, witness, hit

    def __cinit__(self, int n, int root_col, prefix, int b_budget, int target, pmin, visit, keys):
        cdef int i, r, c, rows
        if n < 1 or n > MAXN:
            raise ValueError(f"kernel supports 1 <= n <= {MAXN}")
        self.n = n
        self.root_col = root_col
        self.W = 2 * n + 8
        self.off = n + 3
        rows = n + 4
        self.cells = rows * self.W
        self.budget = b_budget if b_budget >= 0 else 3 * n
        self.target = target
        self.visit = visit
        self.keys = keys
        self.witness = None
        self.hit = None
        self.reached = <char *> calloc(self.cells, sizeof(char))
        self.inshape = <char *> calloc(self.cells, sizeof(char))
        self.up = <char *> calloc(self.cells, sizeof(char))
        self.vcount = <int *> calloc(self.cells, sizeof(int))
        self.shape = <int *> calloc(n + 1, sizeof(int))
        self.untried = <int *> calloc((n + 1) * MAXU, sizeof(int))
        self.prefix = <int *> calloc(len(prefix) + 1, sizeof(int))
        self.hist = <long long *> calloc(n + 1, sizeof(long long))
        self.pmin = <int *> calloc(2 * n + 2, sizeof(int))
        if (self.reached == NULL or self.inshape == NULL or self.up == NULL or self.vcount == NULL
                or self.shape == NULL or self.untried == NULL or self.prefix == NULL
                or self.hist == NULL or self.pmin == NULL):
            raise MemoryError()
        self.nprefix = len(prefix)
        for i in range(self.nprefix):
            self.prefix[i] = prefix[i]
        self.have_pmin = pmin is not None
        if self.have_pmin:
            for i in range(2 * n + 1):
                self.pmin[i] = pmin[i]
        for i in range(self.cells):
            r = i // self.W - 1
            c = i % self.W - self.off
            self.up[i] = ((r + c) & 1) == 0
            if r < 0 or (r == 0 and c < root_col):
                self.reached[i] = 1
        self.min_b = -1
        self.max_b = -1
        self.max_holes = -1

    def __dealloc__(self):
        free(self.reached)
        free(self.inshape)
        free(self.up)
        free(self.vcount)
        free(self.shape)
        free(self.untried)
        free(self.prefix)
        free(self.hist)
        free(self.pmin)

    cdef inline int _nb(self, int idx, int j):
        if j == 0:
            return idx - 1
        if j == 1:
            return idx + 1
        return idx - self.W if self.up[idx] else idx + self.W

    cdef inline int _vx(self, int idx, int j):
        if self.up[idx]:
            if j == 0:
                return idx - 1
            if j == 1:
                return idx + 1
            return idx + self.W
        if j == 0:
            return idx + self.W - 1
        if j == 1:
            return idx + self.W + 1
        return idx

    cdef object _cells(self):
        cdef int i, idx
        out = []
        for i in range(self.size):
            idx = self.shape[i]
            out.append((idx // self.W - 1, idx % self.W - self.off))
        return tuple(out)

    cdef object _key(self):
        cdef int rows[MAXN]
        cdef int cols[MAXN]
        cdef int i, idx
        for i in range(self.size):
            idx = self.shape[i]
            rows[i] = idx // self.W - 1
            cols[i] = idx % self.W - self.off
        return _canonical(rows, cols, self.size)

    cdef int _record(self) except -1:
        cdef int b = self.b
        cdef int h = 1 - self.V + 2 * self.n - b
        self.count += 1
        self.hist[h] += 1
        if self.min_b < 0 or b < self.min_b:
            self.min_b = b
        if b > self.max_b:
            self.max_b = b
        if h > self.max_holes:
            self.max_holes = h
            self.witness = self._cells()
        if self.have_pmin and 3 * h > self.n + 2 - self.pmin[self.n + h]:
            self.violations += 1
        if self.visit is not None:
            self.visit(self._cells())
        if self.keys is not None:
            self.keys.add(self._key())
        if self.target and h == self.target:
            self.hit = self._cells()
            return 1
        return 0

    cdef inline void _add(self, int cell, int e):
        cdef int j, v
        self.shape[self.size] = cell
        self.size += 1
        self.inshape[cell] = 1
        self.b += e
        for j in range(3):
            v = self._vx(cell, j)
            if self.vcount[v] == 0:
                self.V += 1
            self.vcount[v] += 1

    cdef inline void _remove(self, int cell, int e):
        cdef int j, v
        for j in range(3):
            v = self._vx(cell, j)
            self.vcount[v] -= 1
            if self.vcount[v] == 0:
                self.V -= 1
        self.b -= e
        self.inshape[cell] = 0
        self.size -= 1

    cdef int _rec(self, int depth, int L) except -1:
        cdef int *mine = self.untried + depth * MAXU
        cdef int *child = self.untried + (depth + 1) * MAXU
        cdef int idx, t, cell, e, j, nb, m, k, stop
        for idx in range(L - 1, -1, -1):
            if depth < self.nprefix:
                t = L - 1 - idx
                if t < self.prefix[depth]:
                    continue
                if t > self.prefix[depth]:
                    break
            cell = mine[idx]
            e = 0
            for j in range(3):
                e += self.inshape[self._nb(cell, j)]
            if self.b + e > self.budget:
                continue
            self._add(cell, e)
            if self.size == self.n:
                stop = self._record()
            else:
                for k in range(idx):
                    child[k] = mine[k]
                m = idx
                for j in range(3):
                    nb = self._nb(cell, j)
                    if not self.reached[nb]:
                        self.reached[nb] = 1
                        child[m] = nb
                        m += 1
                stop = self._rec(depth + 1, m)
                for k in range(idx, m):
                    self.reached[child[k]] = 0
            self._remove(cell, e)
            if stop:
                return 1
        return 0

    cdef run(self):
        cdef int root = 1 * self.W + self.root_col + self.off
        cdef int j, nb, m = 0
        self.reached[root] = 1
        self._add(root, 0)
        if self.n == 1:
            self._record()
        else:
            for j in range(3):
                nb = self._nb(root, j)
                if not self.reached[nb]:
                    self.reached[nb] = 1
                    self.untried[m] = nb
                    m += 1
            self._rec(0, m)
        hist = [self.hist[i] for i in range(self.n + 1)]
        return (self.count, self.min_b, self.max_b, self.max_holes, self.witness,
                hist, self.violations, self.hit)


def grow(int n, int root_col, prefix=(), int b_budget=-1, int target=0, pmin=None, visit=None,
         keys=None):
    """Compiled twin of ``_pykernel.grow``; see there for the contract."""
    return _Grower(n, root_col, tuple(prefix), b_budget, target, pmin, visit, keys).run()

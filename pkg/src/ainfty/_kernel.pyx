# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the exhaustive sweep loops.

Same algorithms as the pure sweeps in ``_backend``: enumerate basis words,
expand the coderivation twice or evaluate the direct identity, collect
nonzero defects.  Words live in fixed C buffers and coefficients are exact
int64 rationals with overflow detection; anything that does not fit raises
and the caller falls back to the pure path, so results are exact on every
route.
"""

from fractions import Fraction

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcmp, memcpy, memset


class KernelUnsupported(Exception):
    """The structure cannot be represented inside the compiled kernel."""


class KernelOverflow(ArithmeticError):
    """int64 rational arithmetic overflowed; redo the sweep in pure Python."""


cdef extern from *:
    """
    static int ain_add_ovf(long long a, long long b, long long *r)
    { return __builtin_add_overflow(a, b, r); }
    static int ain_mul_ovf(long long a, long long b, long long *r)
    { return __builtin_mul_overflow(a, b, r); }
    """
    int ain_add_ovf(long long a, long long b, long long *r) nogil
    int ain_mul_ovf(long long a, long long b, long long *r) nogil


cdef enum:
    MAXN = 64          # largest word arity the kernel handles
    MAXDIM = 255

MAX_ARITY = MAXN       # re-exported for the dispatcher


cdef long long c_gcd(long long a, long long b) nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef struct Rat:
    long long p
    long long q        # always > 0; zero is 0/1


cdef int rat_mul(Rat a, Rat b, Rat *out) nogil:
    """out = a * b in lowest terms; returns nonzero on overflow."""
    cdef long long g1, g2
    if a.p == 0 or b.p == 0:
        out.p = 0
        out.q = 1
        return 0
    g1 = c_gcd(a.p, b.q)
    g2 = c_gcd(b.p, a.q)
    if ain_mul_ovf(a.p / g1, b.p / g2, &out.p):
        return 1
    if ain_mul_ovf(a.q / g2, b.q / g1, &out.q):
        return 1
    return 0


cdef int rat_add(Rat a, Rat b, Rat *out) nogil:
    """out = a + b in lowest terms; returns nonzero on overflow."""
    cdef long long g, qa, qb, t1, t2, num, den
    if a.p == 0:
        out[0] = b
        return 0
    if b.p == 0:
        out[0] = a
        return 0
    g = c_gcd(a.q, b.q)
    qa = a.q / g
    qb = b.q / g
    if ain_mul_ovf(a.p, qb, &t1):
        return 1
    if ain_mul_ovf(b.p, qa, &t2):
        return 1
    if ain_add_ovf(t1, t2, &num):
        return 1
    if num == 0:
        out.p = 0
        out.q = 1
        return 0
    if ain_mul_ovf(a.q, qb, &den):
        return 1
    g = c_gcd(num, den)
    out.p = num / g
    out.q = den / g
    return 0


cdef struct Term:
    unsigned char w[MAXN]
    int n
    Rat c


cdef int term_insert(Term *buf, int *count, int cap,
                     unsigned char *w, int n, Rat c) nogil:
    """Merge (w, c) into the term buffer; returns nonzero on any failure."""
    cdef int t
    for t in range(count[0]):
        if buf[t].n == n and memcmp(buf[t].w, w, n) == 0:
            return rat_add(buf[t].c, c, &buf[t].c)
    if count[0] >= cap:
        return 1
    memcpy(buf[count[0]].w, w, n)
    buf[count[0]].n = n
    buf[count[0]].c = c
    count[0] += 1
    return 0


cdef class KernelStructure:
    """A finite structure flattened into C arrays for the sweep loops.

    ``degrees`` is the per-basis degree list; ``entries`` is a flat list of
    (arity, word tuple, [(basis, numerator, denominator), ...]) table rows.
    """

    cdef int dim
    cdef int max_k
    cdef int n_entries
    cdef int *deg
    cdef int *ent_k
    cdef int *ent_word_off
    cdef int *ent_out_start    # n_entries + 1 offsets
    cdef int *k_lo             # per arity: first/last+1 entry index
    cdef int *k_hi
    cdef unsigned char *words
    cdef unsigned char *out_b
    cdef Rat *out_c

    def __cinit__(self, degrees, entries):
        cdef int i, e, k, off, uoff
        self.deg = NULL
        self.ent_k = NULL
        self.ent_word_off = NULL
        self.ent_out_start = NULL
        self.k_lo = NULL
        self.k_hi = NULL
        self.words = NULL
        self.out_b = NULL
        self.out_c = NULL

        if not 1 <= len(degrees) <= MAXDIM:
            raise KernelUnsupported("basis dimension out of kernel range")
        self.dim = len(degrees)
        for d in degrees:
            if abs(d) > 2**30:
                raise KernelUnsupported("degree out of kernel range")

        entries = sorted(entries, key=lambda ent: (ent[0], ent[1]))
        self.n_entries = len(entries)
        self.max_k = max((ent[0] for ent in entries), default=0)
        if self.max_k > MAXN:
            raise KernelUnsupported("map arity out of kernel range")

        word_bytes = sum(ent[0] for ent in entries)
        out_count = sum(len(ent[2]) for ent in entries)

        self.deg = <int *> malloc(self.dim * sizeof(int))
        self.ent_k = <int *> malloc(max(1, self.n_entries) * sizeof(int))
        self.ent_word_off = <int *> malloc(max(1, self.n_entries) * sizeof(int))
        self.ent_out_start = <int *> malloc((self.n_entries + 1) * sizeof(int))
        self.k_lo = <int *> calloc(self.max_k + 2, sizeof(int))
        self.k_hi = <int *> calloc(self.max_k + 2, sizeof(int))
        self.words = <unsigned char *> malloc(max(1, word_bytes))
        self.out_b = <unsigned char *> malloc(max(1, out_count))
        self.out_c = <Rat *> malloc(max(1, out_count) * sizeof(Rat))
        if (self.deg == NULL or self.ent_k == NULL or self.ent_word_off == NULL
                or self.ent_out_start == NULL or self.k_lo == NULL
                or self.k_hi == NULL or self.words == NULL
                or self.out_b == NULL or self.out_c == NULL):
            raise MemoryError()

        for i in range(self.dim):
            self.deg[i] = degrees[i]

        off = 0
        uoff = 0
        for e in range(self.n_entries):
            k, word, outs = entries[e]
            self.ent_k[e] = k
            self.ent_word_off[e] = off
            for i in range(k):
                if not 0 <= word[i] < self.dim:
                    raise KernelUnsupported("basis index out of range")
                self.words[off + i] = word[i]
            off += k
            self.ent_out_start[e] = uoff
            for b, num, den in outs:
                if not (-2**63 < num < 2**63 and 0 < den < 2**63):
                    raise KernelUnsupported("coefficient does not fit int64")
                self.out_b[uoff] = b
                self.out_c[uoff].p = num
                self.out_c[uoff].q = den
                uoff += 1
        self.ent_out_start[self.n_entries] = uoff

        e = 0
        for k in range(1, self.max_k + 1):
            self.k_lo[k] = e
            while e < self.n_entries and self.ent_k[e] == k:
                e += 1
            self.k_hi[k] = e

    def __dealloc__(self):
        free(self.deg)
        free(self.ent_k)
        free(self.ent_word_off)
        free(self.ent_out_start)
        free(self.k_lo)
        free(self.k_hi)
        free(self.words)
        free(self.out_b)
        free(self.out_c)

    cdef int expand(self, unsigned char *w, int n, Rat coeff,
                    Term *out, int *count, int cap) nogil:
        """One coderivation pass on (coeff * w), merged into the term buffer."""
        cdef int par[MAXN + 1]
        cdef unsigned char nw[MAXN]
        cdef int k, e, i, u, kmax
        cdef Rat c2
        par[0] = 0
        for i in range(n):
            par[i + 1] = (par[i] + self.deg[w[i]] - 1) & 1
        kmax = self.max_k if self.max_k < n else n
        for k in range(1, kmax + 1):
            for e in range(self.k_lo[k], self.k_hi[k]):
                for i in range(n - k + 1):
                    if memcmp(self.words + self.ent_word_off[e], w + i, k) != 0:
                        continue
                    for u in range(self.ent_out_start[e], self.ent_out_start[e + 1]):
                        if rat_mul(coeff, self.out_c[u], &c2):
                            return 2
                        if par[i]:
                            c2.p = -c2.p
                        memcpy(nw, w, i)
                        nw[i] = self.out_b[u]
                        memcpy(nw + i + 1, w + i + k, n - i - k)
                        if term_insert(out, count, cap, nw, n - k + 1, c2):
                            return 1
        return 0

    cdef long long _expand_bound(self, int n):
        """Upper bound on insertion events of one expansion pass at arity n."""
        cdef long long total = 0
        cdef int e, k
        for e in range(self.n_entries):
            k = self.ent_k[e]
            if k <= n:
                total += (n - k + 1) * (self.ent_out_start[e + 1]
                                        - self.ent_out_start[e])
        return total

    def sweep_coderivation(self, int n, long long start, long long stop):
        """Nonzero double-coderivation defects over words [start, stop).

        Words are indexed lexicographically.  Returns a list of
        (word tuple, [(defect word tuple, numerator, denominator), ...]).
        """
        if n > MAXN:
            raise KernelUnsupported("word arity out of kernel range")
        cdef long long bound1 = self._expand_bound(n)
        cdef long long bound2 = bound1 * bound1
        if bound1 > 1 << 16 or bound2 > 1 << 20:
            raise KernelUnsupported("table too dense for the compiled sweep")
        cdef int capA = <int> bound1
        cdef int capB = <int> bound2
        cdef Term *A = <Term *> malloc(max(1, capA) * sizeof(Term))
        cdef Term *B = <Term *> malloc(max(1, capB) * sizeof(Term))
        if A == NULL or B == NULL:
            free(A)
            free(B)
            raise MemoryError()

        cdef unsigned char w[MAXN]
        cdef long long idx, r
        cdef int j, t, countA, countB, rc
        cdef Rat one
        one.p = 1
        one.q = 1
        failures = []
        try:
            r = start
            for j in range(n - 1, -1, -1):
                w[j] = <unsigned char> (r % self.dim)
                r //= self.dim
            for idx in range(start, stop):
                countA = 0
                rc = self.expand(w, n, one, A, &countA, capA)
                if rc == 0:
                    countB = 0
                    for t in range(countA):
                        if A[t].c.p == 0:
                            continue
                        rc = self.expand(A[t].w, A[t].n, A[t].c, B, &countB, capB)
                        if rc:
                            break
                if rc:
                    raise KernelOverflow()
                defect = []
                for t in range(countB):
                    if B[t].c.p == 0:
                        continue
                    dw = []
                    for j in range(B[t].n):
                        dw.append(B[t].w[j])
                    defect.append((tuple(dw), B[t].c.p, B[t].c.q))
                if defect:
                    word_out = []
                    for j in range(n):
                        word_out.append(w[j])
                    failures.append((tuple(word_out), defect))
                j = n - 1
                while j >= 0:
                    w[j] += 1
                    if w[j] < self.dim:
                        break
                    w[j] = 0
                    j -= 1
        finally:
            free(A)
            free(B)
        return failures

    def sweep_direct(self, int n, long long start, long long stop):
        """Nonzero direct-identity defects over words [start, stop).

        Returns a list of (word tuple, [(basis index, num, den), ...]).
        """
        if n > MAXN:
            raise KernelUnsupported("word arity out of kernel range")
        cdef Rat vec[MAXDIM + 1]
        cdef unsigned char w[MAXN]
        cdef unsigned char ow[MAXN]
        cdef long long pref[MAXN + 1]
        cdef long long idx, r, expo
        cdef int j, lam, k, m, e, e2, u, u2, b
        cdef Rat c2
        failures = []
        r = start
        for j in range(n - 1, -1, -1):
            w[j] = <unsigned char> (r % self.dim)
            r //= self.dim
        for idx in range(start, stop):
            memset(vec, 0, (self.dim) * sizeof(Rat))
            pref[0] = 0
            for j in range(n):
                pref[j + 1] = pref[j] + self.deg[w[j]]
            for lam in range(n):
                for k in range(1, n - lam + 1):
                    m = n - k + 1
                    if k > self.max_k or m > self.max_k:
                        continue
                    for e in range(self.k_lo[k], self.k_hi[k]):
                        if memcmp(self.words + self.ent_word_off[e], w + lam, k) != 0:
                            continue
                        expo = k + lam + k * lam + k * n + k * pref[lam]
                        memcpy(ow, w, lam)
                        memcpy(ow + lam + 1, w + lam + k, n - lam - k)
                        for u in range(self.ent_out_start[e], self.ent_out_start[e + 1]):
                            ow[lam] = self.out_b[u]
                            for e2 in range(self.k_lo[m], self.k_hi[m]):
                                if memcmp(self.words + self.ent_word_off[e2], ow, m) != 0:
                                    continue
                                for u2 in range(self.ent_out_start[e2],
                                                self.ent_out_start[e2 + 1]):
                                    if rat_mul(self.out_c[u], self.out_c[u2], &c2):
                                        raise KernelOverflow()
                                    if expo & 1:
                                        c2.p = -c2.p
                                    b = self.out_b[u2]
                                    if rat_add(vec[b], c2, &vec[b]):
                                        raise KernelOverflow()
            defect = []
            for b in range(self.dim):
                if vec[b].p != 0:
                    defect.append((b, vec[b].p, vec[b].q))
            if defect:
                word_out = []
                for j in range(n):
                    word_out.append(w[j])
                failures.append((tuple(word_out), defect))
            j = n - 1
            while j >= 0:
                w[j] += 1
                if w[j] < self.dim:
                    break
                w[j] = 0
                j -= 1
        return failures

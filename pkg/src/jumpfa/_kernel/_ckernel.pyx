# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled acceptance search; same contract as ``_pykernel``."""

from libc.stdlib cimport malloc, free

cdef enum:
    ROWJ = 0
    LOWJ = 1
    GRL = 2
    GLL = 3
    GRC = 4
    GLC = 5
    GJFA = 6


cdef inline Py_ssize_t _find(const unsigned char* s, Py_ssize_t n,
                             const unsigned char* w, Py_ssize_t m,
                             Py_ssize_t begin) noexcept nogil:
    cdef Py_ssize_t i, j
    i = begin
    while i + m <= n:
        j = 0
        while j < m and s[i + j] == w[j]:
            j += 1
        if j == m:
            return i
        i += 1
    return -1


cdef inline Py_ssize_t _rfind(const unsigned char* s, Py_ssize_t n,
                              const unsigned char* w, Py_ssize_t m) noexcept nogil:
    cdef Py_ssize_t i, j
    i = n - m
    while i >= 0:
        j = 0
        while j < m and s[i + j] == w[j]:
            j += 1
        if j == m:
            return i
        i -= 1
    return -1


cdef class Program:
    """Rule table flattened into C arrays."""

    cdef int start
    cdef int nstates
    cdef int max_rules
    cdef list _words
    cdef int* offsets
    cdef int* targets
    cdef Py_ssize_t* lengths
    cdef const unsigned char** words
    cdef char* finals

    def __cinit__(self, program):
        start, finals, table = program
        self.start = start
        self.nstates = len(table)
        nrules = sum(len(r) for r in table)
        self.offsets = <int*>malloc((self.nstates + 1) * sizeof(int))
        self.targets = <int*>malloc((nrules + 1) * sizeof(int))
        self.lengths = <Py_ssize_t*>malloc((nrules + 1) * sizeof(Py_ssize_t))
        self.words = <const unsigned char**>malloc((nrules + 1) * sizeof(unsigned char*))
        self.finals = <char*>malloc(self.nstates + 1)
        if not (self.offsets and self.targets and self.lengths and self.words and self.finals):
            raise MemoryError()
        self._words = []
        cdef int k = 0
        cdef bytes w
        self.max_rules = 0
        for p in range(self.nstates):
            self.offsets[p] = k
            self.finals[p] = 1 if finals[p] else 0
            if len(table[p]) > self.max_rules:
                self.max_rules = len(table[p])
            for word, q in table[p]:
                w = bytes(word)
                self._words.append(w)
                self.words[k] = <const unsigned char*>w
                self.lengths[k] = len(w)
                self.targets[k] = q
                k += 1
        self.offsets[self.nstates] = k

    def __dealloc__(self):
        free(self.offsets)
        free(self.targets)
        free(self.lengths)
        free(self.words)
        free(self.finals)


def prepare(program):
    return Program(program)


cdef int _right_moves(Program prog, int p, const unsigned char* s, Py_ssize_t n,
                      bint strict, Py_ssize_t* pos, Py_ssize_t* out_s,
                      Py_ssize_t* out_e, int* out_q) noexcept:
    cdef int lo = prog.offsets[p]
    cdef int hi = prog.offsets[p + 1]
    cdef int k, j, count = 0
    cdef Py_ssize_t fx, fw
    cdef bint ok
    for k in range(lo, hi):
        pos[k - lo] = _find(s, n, prog.words[k], prog.lengths[k], 0)
    for k in range(lo, hi):
        fx = pos[k - lo]
        if fx < 0:
            continue
        ok = True
        for j in range(lo, hi):
            fw = pos[j - lo]
            if fw < 0:
                continue
            if strict:
                if fw < fx:
                    ok = False
                    break
            elif fw + prog.lengths[j] <= fx:
                ok = False
                break
        if ok:
            out_s[count] = fx
            out_e[count] = fx + prog.lengths[k]
            out_q[count] = prog.targets[k]
            count += 1
    return count


cdef int _left_moves(Program prog, int p, const unsigned char* s, Py_ssize_t n,
                     bint strict, Py_ssize_t* pos, Py_ssize_t* out_s,
                     Py_ssize_t* out_e, int* out_q) noexcept:
    cdef int lo = prog.offsets[p]
    cdef int hi = prog.offsets[p + 1]
    cdef int k, j, count = 0
    cdef Py_ssize_t lx, ex, lw
    cdef bint ok
    for k in range(lo, hi):
        pos[k - lo] = _rfind(s, n, prog.words[k], prog.lengths[k])
    for k in range(lo, hi):
        lx = pos[k - lo]
        if lx < 0:
            continue
        ex = lx + prog.lengths[k]
        ok = True
        for j in range(lo, hi):
            lw = pos[j - lo]
            if lw < 0:
                continue
            if strict:
                if lw + prog.lengths[j] > ex:
                    ok = False
                    break
            elif lw >= ex:
                ok = False
                break
        if ok:
            out_s[count] = lx
            out_e[count] = ex
            out_q[count] = prog.targets[k]
            count += 1
    return count


cdef int _letter_move(Program prog, int p, const unsigned char* s, Py_ssize_t n,
                      bint leftward, Py_ssize_t* out_s, int* out_q) noexcept:
    cdef int lo = prog.offsets[p]
    cdef int hi = prog.offsets[p + 1]
    cdef int k
    cdef Py_ssize_t i
    if leftward:
        i = n - 1
        while i >= 0:
            for k in range(lo, hi):
                if prog.words[k][0] == s[i]:
                    out_s[0] = i
                    out_q[0] = prog.targets[k]
                    return 1
            i -= 1
    else:
        for i in range(n):
            for k in range(lo, hi):
                if prog.words[k][0] == s[i]:
                    out_s[0] = i
                    out_q[0] = prog.targets[k]
                    return 1
    return 0


cdef bint _contains_any(Program prog, int p, const unsigned char* s, Py_ssize_t n) noexcept:
    cdef int k
    for k in range(prog.offsets[p], prog.offsets[p + 1]):
        if _find(s, n, prog.words[k], prog.lengths[k], 0) >= 0:
            return True
    return False


def search(Program prog, int model, bytes tape, bint strict=False):
    """Breadth-first acceptance search.

    Returns ``(accepted, configurations_visited, max_frontier)``.
    """
    cdef list queue
    cdef set seen
    cdef Py_ssize_t head = 0, widest = 1, n, i, count, c
    cdef int p, q
    cdef bytes left, right, empty = b""
    cdef const unsigned char* s
    cdef tuple config, nxt
    cdef int cap = prog.max_rules + 1
    cdef Py_ssize_t* pos = <Py_ssize_t*>malloc(cap * sizeof(Py_ssize_t))
    cdef Py_ssize_t* out_s = <Py_ssize_t*>malloc(cap * sizeof(Py_ssize_t))
    cdef Py_ssize_t* out_e = <Py_ssize_t*>malloc(cap * sizeof(Py_ssize_t))
    cdef int* out_q = <int*>malloc(cap * sizeof(int))
    if not (pos and out_s and out_e and out_q):
        free(pos); free(out_s); free(out_e); free(out_q)
        raise MemoryError()

    if model == GRL:
        config = (prog.start, empty, tape)
    else:
        config = (prog.start, tape, empty)
    seen = {config}
    queue = [config]
    try:
        while head < len(queue):
            config = <tuple>queue[head]
            head += 1
            p = config[0]
            left = <bytes>config[1]
            right = <bytes>config[2]
            if len(left) == 0 and len(right) == 0 and prog.finals[p]:
                return True, len(seen), widest

            if model == GRC or model == GLC or model == ROWJ or model == LOWJ:
                s = <const unsigned char*>left
                n = len(left)
                if model == GRC:
                    count = _right_moves(prog, p, s, n, strict, pos, out_s, out_e, out_q)
                elif model == GLC:
                    count = _left_moves(prog, p, s, n, strict, pos, out_s, out_e, out_q)
                else:
                    count = _letter_move(prog, p, s, n, model == LOWJ, out_s, out_q)
                    if count:
                        out_e[0] = out_s[0] + 1
                for c in range(count):
                    nxt = (out_q[c], left[out_e[c]:] + left[:out_s[c]], empty)
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
            elif model == GJFA:
                s = <const unsigned char*>left
                n = len(left)
                for c in range(prog.offsets[p], prog.offsets[p + 1]):
                    i = _find(s, n, prog.words[c], prog.lengths[c], 0)
                    while i >= 0:
                        nxt = (prog.targets[c], left[:i] + left[i + prog.lengths[c]:], empty)
                        if nxt not in seen:
                            seen.add(nxt)
                            queue.append(nxt)
                        i = _find(s, n, prog.words[c], prog.lengths[c], i + 1)
            elif model == GRL:
                s = <const unsigned char*>right
                n = len(right)
                count = _right_moves(prog, p, s, n, strict, pos, out_s, out_e, out_q)
                for c in range(count):
                    nxt = (out_q[c], left + right[:out_s[c]], right[out_e[c]:])
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
                if count == 0 and len(left) > 0 and not _contains_any(prog, p, s, n):
                    nxt = (p, empty, left + right)
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
            elif model == GLL:
                s = <const unsigned char*>left
                n = len(left)
                count = _left_moves(prog, p, s, n, strict, pos, out_s, out_e, out_q)
                for c in range(count):
                    nxt = (out_q[c], left[:out_s[c]], left[out_e[c]:] + right)
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
                if count == 0 and len(right) > 0 and not _contains_any(prog, p, s, n):
                    nxt = (p, left + right, empty)
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
            else:
                raise ValueError(f"unknown model code {model}")

            if len(queue) - head > widest:
                widest = len(queue) - head
        return False, len(seen), widest
    finally:
        free(pos)
        free(out_s)
        free(out_e)
        free(out_q)

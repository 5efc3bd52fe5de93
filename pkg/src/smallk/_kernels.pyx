# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Freudenthal kernel; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free


cdef inline void _dominant(long long *v, const long long *cartan, int r) noexcept nogil:
    cdef int i, j
    cdef long long c
    cdef bint changed = True
    while changed:
        changed = False
        for i in range(r):
            c = v[i]
            if c < 0:
                for j in range(r):
                    v[j] -= c * cartan[i * r + j]
                changed = True
                break


cdef inline long long _encode(const long long *v, int r, long long radix):
    cdef long long code = 0
    cdef int j
    for j in range(r):
        if v[j] >= radix:
            return -1
        code = code * radix + v[j]
    return code


def freudenthal_dominant(int rank, cartan, pos, gram, dominants):
    cdef int r = rank
    cdef int npos = len(pos)
    cdef Py_ssize_t nd = len(dominants)
    cdef Py_ssize_t t, k
    cdef int i, j, a
    cdef long long radix = 1
    for d in dominants:
        for x in d:
            if x + 1 > radix:
                radix = x + 1
    cdef long long *C = <long long *> malloc(r * r * sizeof(long long))
    cdef long long *P = <long long *> malloc(npos * r * sizeof(long long))
    cdef long long *GP = <long long *> malloc(npos * r * sizeof(long long))
    cdef long long *G = <long long *> malloc(r * r * sizeof(long long))
    cdef long long *nu = <long long *> malloc(r * sizeof(long long))
    cdef long long *tmp = <long long *> malloc(r * sizeof(long long))
    cdef long long *M = <long long *> malloc(nd * sizeof(long long))
    cdef long long acc, top, nrm, denom, code, s
    index = {}
    try:
        for i in range(r):
            for j in range(r):
                C[i * r + j] = cartan[i][j]
                G[i * r + j] = gram[i][j]
        for a in range(npos):
            for j in range(r):
                P[a * r + j] = pos[a][j]
        for a in range(npos):
            for i in range(r):
                s = 0
                for j in range(r):
                    s += G[i * r + j] * P[a * r + j]
                GP[a * r + i] = s
        for t in range(nd):
            d = dominants[t]
            for j in range(r):
                tmp[j] = d[j]
            index[_encode(tmp, r, radix)] = t
        d = dominants[0]
        top = 0
        for i in range(r):
            for j in range(r):
                top += (d[i] + 1) * G[i * r + j] * (d[j] + 1)
        M[0] = 1
        for t in range(1, nd):
            d = dominants[t]
            acc = 0
            for a in range(npos):
                for j in range(r):
                    nu[j] = d[j]
                while True:
                    for j in range(r):
                        nu[j] += P[a * r + j]
                        tmp[j] = nu[j]
                    _dominant(tmp, C, r)
                    code = _encode(tmp, r, radix)
                    if code < 0:
                        break
                    kk = index.get(code)
                    if kk is None:
                        break
                    k = kk
                    s = 0
                    for j in range(r):
                        s += nu[j] * GP[a * r + j]
                    acc += M[k] * s
            nrm = 0
            for i in range(r):
                for j in range(r):
                    nrm += (d[i] + 1) * G[i * r + j] * (d[j] + 1)
            denom = top - nrm
            if (2 * acc) % denom != 0:
                raise ArithmeticError(f"non-integral multiplicity at {d}")
            M[t] = (2 * acc) // denom
        return [M[t] for t in range(nd)]
    finally:
        free(C); free(P); free(GP); free(G); free(nu); free(tmp); free(M)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Dense Gaussian-elimination kernel mod p, compiled.

Same canonical reduced-echelon output contract as _purekernel.
"""

from libc.stdlib cimport calloc, free


def kernel_basis(rows, int ncols, long p):
    cdef int nrows = len(rows)
    cdef long* M = <long*> calloc(max(nrows * ncols, 1), sizeof(long))
    if M == NULL:
        raise MemoryError()
    cdef int i, k, col, piv
    cdef int rank = 0
    cdef long coef, inv, t
    try:
        i = 0
        for row in rows:
            for c, v in row.items():
                M[i * ncols + <int> c] = (<long> v) % p
            i += 1
        for k in range(nrows * ncols):
            if M[k] < 0:
                M[k] += p
        pivot_cols = []
        for col in range(ncols):
            piv = -1
            for i in range(rank, nrows):
                if M[i * ncols + col] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for k in range(ncols):
                    t = M[rank * ncols + k]
                    M[rank * ncols + k] = M[piv * ncols + k]
                    M[piv * ncols + k] = t
            inv = pow(M[rank * ncols + col], p - 2, p)
            for k in range(col, ncols):
                M[rank * ncols + k] = (M[rank * ncols + k] * inv) % p
            for i in range(nrows):
                if i == rank:
                    continue
                coef = M[i * ncols + col]
                if coef != 0:
                    for k in range(col, ncols):
                        t = (M[i * ncols + k] - coef * M[rank * ncols + k]) % p
                        if t < 0:
                            t += p
                        M[i * ncols + k] = t
            pivot_cols.append(col)
            rank += 1
        pivot_set = set(pivot_cols)
        basis = []
        for col in range(ncols):
            if col in pivot_set:
                continue
            vec = [0] * ncols
            vec[col] = 1
            for i in range(rank):
                coef = M[i * ncols + col]
                if coef:
                    vec[pivot_cols[i]] = p - coef
            basis.append(vec)
        return basis, rank
    finally:
        free(M)

# cython: language_level=3
# cython: boundscheck=False
"""Compiled exact-arithmetic kernels.

Same contracts as ``_kernels_py``: Gaussian integers as Python ints (so
precision is unbounded).  Loop bookkeeping, the zero-entry early exit
and the zero-weight skip all run at C level; only surviving diagonals
touch Python integer arithmetic.
"""

from libc.stdlib cimport free, malloc

BACKEND_NAME = "compiled"


def gmf_sum(list perms, list wre, list wim, list pre, list pim):
    """Weighted sum over permutations of entry products; see _kernels_py."""
    cdef Py_ssize_t n = len(pre)
    cdef Py_ssize_t m = len(perms)
    cdef Py_ssize_t k, i, j
    cdef bint zero
    cdef tuple perm
    cdef list row_re, row_im
    cdef unsigned char *nonzero = <unsigned char *> malloc(n * n if n else 1)
    if nonzero == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            row_re = <list> pre[i]
            row_im = <list> pim[i]
            for j in range(n):
                nonzero[i * n + j] = 1 if (row_re[j] or row_im[j]) else 0
        acc_re = 0
        acc_im = 0
        for k in range(m):
            wr = wre[k]
            wi = wim[k]
            if not wr and not wi:
                continue
            perm = <tuple> perms[k]
            zero = False
            for i in range(n):
                if not nonzero[i * n + <Py_ssize_t> perm[i]]:
                    zero = True
                    break
            if zero:
                continue
            prod_re = 1
            prod_im = 0
            for i in range(n):
                j = <Py_ssize_t> perm[i]
                er = (<list> pre[i])[j]
                ei = (<list> pim[i])[j]
                prod_re, prod_im = (
                    prod_re * er - prod_im * ei,
                    prod_re * ei + prod_im * er,
                )
            acc_re = acc_re + wr * prod_re - wi * prod_im
            acc_im = acc_im + wr * prod_im + wi * prod_re
        return acc_re, acc_im
    finally:
        free(nonzero)


def det_gaussian_int(list pre, list pim):
    """Fraction-free exact determinant over Gaussian integers; see _kernels_py."""
    cdef Py_ssize_t n = len(pre)
    if n == 0:
        return 1, 0
    cdef list are = [list(row) for row in pre]
    cdef list aim = [list(row) for row in pim]
    cdef Py_ssize_t k, i, j
    cdef int sign = 1
    cdef list are_k, aim_k, are_i, aim_i
    prev_re = 1
    prev_im = 0
    for k in range(n - 1):
        are_k = <list> are[k]
        aim_k = <list> aim[k]
        if not are_k[k] and not aim_k[k]:
            for i in range(k + 1, n):
                if (<list> are[i])[k] or (<list> aim[i])[k]:
                    are[k], are[i] = are[i], are[k]
                    aim[k], aim[i] = aim[i], aim[k]
                    sign = -sign
                    break
            else:
                return 0, 0
            are_k = <list> are[k]
            aim_k = <list> aim[k]
        pkk_re = are_k[k]
        pkk_im = aim_k[k]
        nrm = prev_re * prev_re + prev_im * prev_im
        for i in range(k + 1, n):
            are_i = <list> are[i]
            aim_i = <list> aim[i]
            aik_re = are_i[k]
            aik_im = aim_i[k]
            for j in range(k + 1, n):
                t_re = (
                    are_i[j] * pkk_re
                    - aim_i[j] * pkk_im
                    - aik_re * are_k[j]
                    + aik_im * aim_k[j]
                )
                t_im = (
                    are_i[j] * pkk_im
                    + aim_i[j] * pkk_re
                    - aik_re * aim_k[j]
                    - aik_im * are_k[j]
                )
                if k:
                    are_i[j] = (t_re * prev_re + t_im * prev_im) // nrm
                    aim_i[j] = (t_im * prev_re - t_re * prev_im) // nrm
                else:
                    are_i[j] = t_re
                    aim_i[j] = t_im
        prev_re = pkk_re
        prev_im = pkk_im
    return sign * (<list> are[n - 1])[n - 1], sign * (<list> aim[n - 1])[n - 1]

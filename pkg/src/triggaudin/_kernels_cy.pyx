# cython: language_level=3
"""Cython twin of triggaudin._kernels_py.

The coefficient values are generic Python objects (exact rationals,
rational functions, PBW elements), so the win here comes from typed
dict/loop plumbing rather than native arithmetic.
"""


def sparse_matmul(dict a, dict b):
    cdef dict by_row = {}
    cdef dict out = {}
    cdef tuple key
    cdef object r, c, v, w, c2, p
    cdef list row
    for key, v in b.items():
        r = key[0]
        c = key[1]
        row = <list> by_row.get(r)
        if row is None:
            by_row[r] = [(c, v)]
        else:
            row.append((c, v))
    cdef tuple item
    cdef tuple okey
    for key, v in a.items():
        r = key[0]
        c = key[1]
        row = <list> by_row.get(c)
        if row is None:
            continue
        for item in row:
            c2 = item[0]
            w = item[1]
            okey = (r, c2)
            p = v * w
            if okey in out:
                out[okey] = out[okey] + p
            else:
                out[okey] = p
    return {k: v for k, v in out.items() if v}


def sparse_add(dict a, dict b):
    cdef dict out = dict(a)
    cdef object k, v, s
    for k, v in b.items():
        if k in out:
            s = out[k] + v
            if s:
                out[k] = s
            else:
                del out[k]
        else:
            out[k] = v
    return out

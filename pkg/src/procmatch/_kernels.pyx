# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reachability exploration; see _kernels_py for the reference semantics."""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy


def explore_markings(pre, post, initial, Py_ssize_t bound):
    if bound < 1:
        raise ValueError("bound must be >= 1")
    cdef Py_ssize_t n_places = len(initial)
    cdef Py_ssize_t n_trans = len(pre)
    cdef Py_ssize_t width = n_places * sizeof(int)
    cdef Py_ssize_t i, k, t, head, target, n_pre = 0, n_post = 0

    for t in range(n_trans):
        n_pre += len(pre[t])
        n_post += len(post[t])

    cdef int *pre_ptr = <int *> malloc((n_trans + 1) * sizeof(int))
    cdef int *post_ptr = <int *> malloc((n_trans + 1) * sizeof(int))
    cdef int *pre_idx = <int *> malloc((n_pre + 1) * sizeof(int))
    cdef int *post_idx = <int *> malloc((n_post + 1) * sizeof(int))
    cdef int *cur = <int *> malloc((n_places + 1) * sizeof(int))
    cdef int *nxt = <int *> malloc((n_places + 1) * sizeof(int))
    if not (pre_ptr and post_ptr and pre_idx and post_idx and cur and nxt):
        free(pre_ptr); free(post_ptr); free(pre_idx); free(post_idx); free(cur); free(nxt)
        raise MemoryError()

    cdef bint enabled
    cdef bint complete = True
    cdef bytes key
    cdef list store = []
    cdef dict index = {}
    cdef list edges = []
    try:
        pre_ptr[0] = 0
        post_ptr[0] = 0
        for t in range(n_trans):
            k = pre_ptr[t]
            for p in pre[t]:
                pre_idx[k] = p
                k += 1
            pre_ptr[t + 1] = k
            k = post_ptr[t]
            for p in post[t]:
                post_idx[k] = p
                k += 1
            post_ptr[t + 1] = k

        for i in range(n_places):
            cur[i] = initial[i]
        key = PyBytes_FromStringAndSize(<char *> cur, width)
        index[key] = 0
        store.append(key)

        head = 0
        while head < len(store):
            memcpy(cur, PyBytes_AS_STRING(store[head]), width)
            for t in range(n_trans):
                enabled = True
                for k in range(pre_ptr[t], pre_ptr[t + 1]):
                    if cur[pre_idx[k]] <= 0:
                        enabled = False
                        break
                if not enabled:
                    continue
                memcpy(nxt, cur, width)
                for k in range(pre_ptr[t], pre_ptr[t + 1]):
                    nxt[pre_idx[k]] -= 1
                for k in range(post_ptr[t], post_ptr[t + 1]):
                    nxt[post_idx[k]] += 1
                key = PyBytes_FromStringAndSize(<char *> nxt, width)
                found = index.get(key)
                if found is None:
                    if len(store) >= bound:
                        complete = False
                        break
                    target = len(store)
                    index[key] = target
                    store.append(key)
                else:
                    target = found
                edges.append((head, t, target))
            if not complete:
                break
            head += 1
    finally:
        free(pre_ptr); free(post_ptr); free(pre_idx); free(post_idx); free(cur); free(nxt)

    markings = [tuple(memoryview(b).cast("i")) for b in store]
    return markings, edges, complete

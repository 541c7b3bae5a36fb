# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled brute-force counting walks.

Mirrors homcount._countwalk_py exactly: one recursion node per model, no
memoization (the counts serve as an enumeration oracle, so every model is
visited). Counters are 64-bit, which covers every k the guard admits.
"""

cdef int MAX_K = 16


cdef unsigned long long _walk_models(unsigned long long avail, bint last_r,
                                     bint constrained) noexcept nogil:
    cdef unsigned long long total = 1
    cdef unsigned long long m, low, sub
    if not (constrained and last_r):
        m = avail
        while m:
            low = m & (~m + 1)
            total += _walk_models(avail ^ low, True, constrained)
            m ^= low
    sub = avail
    while sub:
        total += _walk_models(avail ^ sub, False, constrained)
        sub = (sub - 1) & avail
    return total


cdef unsigned long long _walk_surjective(unsigned long long avail, bint last_r,
                                         bint constrained) noexcept nogil:
    cdef unsigned long long total = 0 if avail else 1
    cdef unsigned long long m, low, sub
    if not (constrained and last_r):
        m = avail
        while m:
            low = m & (~m + 1)
            total += _walk_surjective(avail ^ low, True, constrained)
            m ^= low
    sub = avail
    while sub:
        total += _walk_surjective(avail ^ sub, False, constrained)
        sub = (sub - 1) & avail
    return total


cdef unsigned long long _walk_osp(unsigned long long avail) noexcept nogil:
    cdef unsigned long long total = 0 if avail else 1
    cdef unsigned long long sub = avail
    while sub:
        total += _walk_osp(avail ^ sub)
        sub = (sub - 1) & avail
    return total


cdef unsigned long long _full_mask(int k) except? 0:
    if k < 0:
        raise ValueError(f"color count must be nonnegative, got {k}")
    if k > MAX_K:
        raise ValueError(f"brute-force walk not supported beyond k={MAX_K}, got {k}")
    return (<unsigned long long>1 << k) - 1


def count_models(int k, bint constrained):
    """Number of models over colors 1..k (every prefix choice is one model)."""
    cdef unsigned long long mask = _full_mask(k)
    cdef unsigned long long out
    with nogil:
        out = _walk_models(mask, False, constrained)
    return out


def count_surjective(int k, bint constrained):
    """Models using all k colors: same walk, counting only exhausted-color leaves."""
    cdef unsigned long long mask = _full_mask(k)
    cdef unsigned long long out
    with nogil:
        out = _walk_surjective(mask, False, constrained)
    return out


def count_ordered_set_partitions(int k):
    """Sequences of disjoint nonempty color sets covering 1..k (S-points only)."""
    cdef unsigned long long mask = _full_mask(k)
    cdef unsigned long long out
    with nogil:
        out = _walk_osp(mask)
    return out

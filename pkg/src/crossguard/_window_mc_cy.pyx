# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Monte Carlo kernel for window confirmation trials.

Twin of ``_window_mc_py.py``; both must produce identical counts for
identical arguments.  Keep the SplitMix64 constants and the trial
substream derivation in lockstep with ``crossguard.rng``.
"""

from libc.stdint cimport uint64_t


cdef extern from *:
    """
    static const uint64_t CG_GOLDEN = 0x9E3779B97F4A7C15ULL;

    static inline uint64_t cg_mix64(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    """
    const uint64_t CG_GOLDEN
    uint64_t cg_mix64(uint64_t z) nogil


def count_confirmed_windows(double p, int n, int k, long long trials,
                            unsigned long long seed):
    """Number of simulated n-frame windows reaching >= k detections."""
    cdef long long confirmed = 0
    cdef long long trial
    cdef uint64_t state
    cdef int hits, frame
    cdef double u
    cdef double inv = 1.0 / 9007199254740992.0  # 2**-53
    with nogil:
        for trial in range(trials):
            state = cg_mix64(seed + (<uint64_t> (trial + 1)) * CG_GOLDEN)
            hits = 0
            for frame in range(n):
                state = state + CG_GOLDEN
                u = <double> (cg_mix64(state) >> 11) * inv
                if u < p:
                    hits += 1
                    if hits >= k:
                        confirmed += 1
                        break
    return confirmed

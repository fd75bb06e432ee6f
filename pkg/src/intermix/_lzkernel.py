"""JIT-compiled inner loops for the sliding-window parser.

Tokens travel as two parallel int64 arrays: offsets[t] == 0 marks a literal
whose byte value sits in lengths[t]; offsets[t] > 0 is a back-reference of
lengths[t] bytes. Everything here is integer arithmetic, so results are
bit-identical across platforms.
"""

from __future__ import annotations

import numpy as np
from numba import njit

HASH_SIZE = 1 << 16


@njit(cache=True)
def _hash_at(data, i, hb):
    if hb == 2:
        return (np.int64(data[i]) << 8) | np.int64(data[i + 1])
    return (
        (np.int64(data[i]) << 10) ^ (np.int64(data[i + 1]) << 5) ^ np.int64(data[i + 2])
    ) & np.int64(HASH_SIZE - 1)


@njit(cache=True)
def parse(data, window, min_match, max_match):
    """Greedy longest-match parse; nearest offset wins length ties.

    The hash chain enumerates candidate positions nearest-first, and a farther
    candidate replaces the current best only on a strictly longer match, which
    realizes the tie rule without extra bookkeeping. The single-byte probe at
    position `best` before a full compare is a pure necessary-condition filter:
    a candidate that fails it cannot exceed the current best length.
    """
    n = data.shape[0]
    offs = np.empty(n, np.int64)
    lens = np.empty(n, np.int64)
    head = np.full(HASH_SIZE, np.int64(-1))
    prev = np.empty(n, np.int64)
    # A 2-byte hash when min_match == 2, else 3 bytes: the hash width never
    # exceeds min_match, so every admissible match shares its anchor hash.
    hb = 2 if min_match == 2 else 3
    t = 0
    i = 0
    while i < n:
        best = 0
        best_off = 0
        if i + min_match <= n:
            cap = max_match
            if n - i < cap:
                cap = n - i
            j = head[_hash_at(data, i, hb)]
            while j >= 0 and i - j <= window:
                if best == 0 or data[j + best] == data[i + best]:
                    length = 0
                    while length < cap and data[j + length] == data[i + length]:
                        length += 1
                    if length > best:
                        best = length
                        best_off = i - j
                        if best == cap:
                            break
                j = prev[j]
        if best >= min_match:
            offs[t] = best_off
            lens[t] = best
            t += 1
            end = i + best
            while i < end:
                if i + hb <= n:
                    h = _hash_at(data, i, hb)
                    prev[i] = head[h]
                    head[h] = i
                i += 1
        else:
            offs[t] = 0
            lens[t] = np.int64(data[i])
            t += 1
            if i + hb <= n:
                h = _hash_at(data, i, hb)
                prev[i] = head[h]
                head[h] = i
            i += 1
    return t, offs[:t], lens[:t]


@njit(cache=True)
def decode(offs, lens, total):
    """Expand a token array pair into `total` output bytes.

    Returns (buffer, produced); produced == -1 flags a back-reference pointing
    before the start of the output, i.e. a corrupt stream.
    """
    out = np.empty(total, np.uint8)
    pos = 0
    for k in range(offs.shape[0]):
        off = offs[k]
        if off == 0:
            out[pos] = np.uint8(lens[k])
            pos += 1
        else:
            if off > pos:
                return out, np.int64(-1)
            src = pos - off
            for step in range(lens[k]):
                out[pos] = out[src + step]
                pos += 1
    return out, np.int64(pos)

"""Pure-Python construction kernels, used when the compiled extension is absent.

Each builder takes a ``bytes`` of letter codes in ``0..3`` and returns flat
numpy arrays. Transition tables have four slots per node, ``-1`` when absent.
"""

import numpy as np


def sa_build(codes: bytes):
    """Online suffix automaton. Returns ``(length, link, trans)``; state 0 is initial."""
    length = [0]
    link = [-1]
    trans = [[-1, -1, -1, -1]]
    last = 0
    for c in codes:
        cur = len(length)
        length.append(length[last] + 1)
        link.append(0)
        trans.append([-1, -1, -1, -1])
        p = last
        while p != -1 and trans[p][c] == -1:
            trans[p][c] = cur
            p = link[p]
        if p != -1:
            q = trans[p][c]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = len(length)
                length.append(length[p] + 1)
                link.append(link[q])
                trans.append(list(trans[q]))
                while p != -1 and trans[p][c] == q:
                    trans[p][c] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        last = cur
    return (
        np.array(length, dtype=np.int32),
        np.array(link, dtype=np.int32),
        np.array(trans, dtype=np.int32).reshape(-1, 4),
    )


def eertree_build(codes: bytes):
    """Online palindromic tree.

    Returns ``(length, link, trans, end)``. Node 0 is the imaginary root of
    length -1, node 1 the empty root; ``end[v]`` is the index just past the
    first occurrence of node ``v``'s palindrome.
    """
    length = [-1, 0]
    link = [0, 0]
    trans = [[-1, -1, -1, -1], [-1, -1, -1, -1]]
    end = [0, 0]
    last = 1
    s = codes
    for i, c in enumerate(s):
        cur = last
        while True:
            j = i - 1 - length[cur]
            if j >= 0 and s[j] == c:
                break
            cur = link[cur]
        nxt = trans[cur][c]
        if nxt != -1:
            last = nxt
            continue
        v = len(length)
        length.append(length[cur] + 2)
        end.append(i + 1)
        trans.append([-1, -1, -1, -1])
        if length[v] == 1:
            link.append(1)
        else:
            p = link[cur]
            while True:
                j = i - 1 - length[p]
                if j >= 0 and s[j] == c:
                    break
                p = link[p]
            link.append(trans[p][c])
        trans[cur][c] = v
        last = v
    return (
        np.array(length, dtype=np.int32),
        np.array(link, dtype=np.int32),
        np.array(trans, dtype=np.int32).reshape(-1, 4),
        np.array(end, dtype=np.int64),
    )

"""Hot loops over flat int64 arrays.

Every function here compiles under numba and also runs as plain Python
when ``STRONGGENUS_NO_NUMBA`` is set; keep the bodies inside the numba
nopython subset.

Conventions: darts ``2k``/``2k+1`` belong to edge ``k``; ``succ[d]`` is the
dart after ``d`` in the rotation at its vertex; the orientable face
permutation is ``d -> succ[d ^ 1]``.
"""

from __future__ import annotations

import numpy as np

from ._accel import njit

# search status codes
DONE = 0
STOPPED = 1
NODE_LIMIT = 2


@njit(cache=True)
def face_labels(succ):
    """Label each dart with the index of its face; returns ``(labels, count)``."""
    nd = succ.shape[0]
    labels = np.full(nd, -1, dtype=np.int64)
    count = 0
    for start in range(nd):
        if labels[start] >= 0:
            continue
        d = start
        while labels[d] < 0:
            labels[d] = count
            d = succ[d ^ 1]
        count += 1
    return labels, count


@njit(cache=True)
def count_faces(succ):
    nd = succ.shape[0]
    seen = np.zeros(nd, dtype=np.bool_)
    count = 0
    for start in range(nd):
        if seen[start]:
            continue
        d = start
        while not seen[d]:
            seen[d] = True
            d = succ[d ^ 1]
        count += 1
    return count


@njit(cache=True)
def count_faces_batch(succs):
    """Face counts for a stack of rotation systems (one per row)."""
    out = np.empty(succs.shape[0], dtype=np.int64)
    for i in range(succs.shape[0]):
        out[i] = count_faces(succs[i])
    return out


@njit(cache=True)
def _trail_push(trail, top, kind, idx, val):
    trail[top, 0] = kind
    trail[top, 1] = idx
    trail[top, 2] = val
    return top + 1


@njit(cache=True, nogil=True)
def bnb_search(
    endpoints,
    order,
    vdarts,
    vdeg,
    choice_start,
    choice_count,
    choice_succ,
    allowed,
    prefix,
    strong,
    min_face_len,
    genus_floor,
    control,
    max_nodes,
    witness,
    prune,
):
    """Depth-first branch and bound over orientable rotation systems.

    Vertices are assigned in ``order``; vertex ``order[i]`` takes one of the
    rotations ``choice_start[v] .. choice_start[v] + choice_count[v] - 1``
    whose successor darts are rows of ``choice_succ`` (aligned with
    ``vdarts[v]``).  Choices with ``allowed[c] == 0`` are skipped.  The
    first ``len(prefix)`` vertices are fixed to ``prefix``.

    With ``prune`` false nothing is cut early: repeated vertices on partial
    faces are only counted and every complete system is checked at the leaf.

    ``control[0]`` is an external stop flag, ``control[1]`` a shared genus
    bound that other workers may lower.  A branch is cut when its genus
    lower bound exceeds ``control[1]`` or reaches the best genus found here.

    Returns ``(best_genus, nodes, status)``; ``best_genus == -1`` when no
    embedding meets the bounds.  ``witness`` receives the choice per
    vertex of the best embedding.
    """
    nd = endpoints.shape[0]
    n = order.shape[0]
    m = nd // 2
    words = (n + 63) // 64

    # chain bookkeeping over the partial face permutation
    nxt = np.full(nd, -1, dtype=np.int64)
    head = np.arange(nd).astype(np.int64)  # valid at chain tails
    tail = np.arange(nd).astype(np.int64)  # valid at chain heads
    clen = np.ones(nd, dtype=np.int64)  # valid at chain heads
    cmask = np.zeros((nd, words), dtype=np.int64)  # valid at chain heads
    for d in range(nd):
        v = endpoints[d]
        cmask[d, v // 64] = np.int64(1) << np.int64(v % 64)

    trail = np.empty((nd * (4 + words) + 16, 3), dtype=np.int64)
    top = 0
    closed = 0
    closed_darts = 0
    open_chains = nd

    cur = np.full(n, -1, dtype=np.int64)
    mark = np.zeros(n, dtype=np.int64)
    saved_closed = np.zeros(n, dtype=np.int64)
    saved_cdarts = np.zeros(n, dtype=np.int64)
    saved_open = np.zeros(n, dtype=np.int64)
    assigned = np.full(n, -1, dtype=np.int64)

    bad = 0
    saved_bad = np.zeros(n, dtype=np.int64)
    best = -1
    nodes = 0
    status = DONE
    npre = prefix.shape[0]
    depth = npre

    # apply the fixed prefix once; any violation empties the subtree
    for i in range(npre):
        v = order[i]
        c = choice_start[v] + prefix[i]
        assigned[v] = prefix[i]
        for j in range(vdeg[v]):
            e = vdarts[v, j]
            a = e ^ 1
            b = choice_succ[c, j]
            ha = head[a]
            nxt[a] = b
            if ha == b:
                closed += 1
                closed_darts += clen[b]
                open_chains -= 1
            else:
                if strong:
                    for w in range(words):
                        if (cmask[ha, w] & cmask[b, w]) != 0:
                            bad += 1
                            break
                    if bad and prune:
                        return best, nodes, status
                tb = tail[b]
                tail[ha] = tb
                head[tb] = ha
                clen[ha] += clen[b]
                for w in range(words):
                    cmask[ha, w] |= cmask[b, w]
                open_chains -= 1
    if npre == n:
        genus = (2 - n + m - closed) // 2
        if genus <= control[1] and bad == 0:
            for i in range(n):
                witness[order[i]] = assigned[order[i]]
            best = genus
        return best, 1, status

    cur[depth] = -1
    while depth >= npre:
        v = order[depth]
        if cur[depth] >= 0:
            # undo the previous choice at this depth
            while top > mark[depth]:
                top -= 1
                kind = trail[top, 0]
                idx = trail[top, 1]
                val = trail[top, 2]
                if kind == 0:
                    nxt[idx] = val
                elif kind == 1:
                    head[idx] = val
                elif kind == 2:
                    tail[idx] = val
                elif kind == 3:
                    clen[idx] = val
                else:
                    cmask[idx, kind - 4] = val
            closed = saved_closed[depth]
            closed_darts = saved_cdarts[depth]
            open_chains = saved_open[depth]
            bad = saved_bad[depth]
        else:
            saved_bad[depth] = bad
            saved_closed[depth] = closed
            saved_cdarts[depth] = closed_darts
            saved_open[depth] = open_chains
            mark[depth] = top
        cur[depth] += 1
        if cur[depth] >= choice_count[v]:
            cur[depth] = -1
            depth -= 1
            continue
        c = choice_start[v] + cur[depth]
        if allowed[c] == 0:
            continue

        nodes += 1
        if (nodes & 4095) == 0:
            if control[0] != 0:
                status = STOPPED
                break
            if max_nodes > 0 and nodes >= max_nodes:
                status = NODE_LIMIT
                break

        ok = True
        for j in range(vdeg[v]):
            e = vdarts[v, j]
            a = e ^ 1
            b = choice_succ[c, j]
            ha = head[a]
            top = _trail_push(trail, top, 0, a, nxt[a])
            nxt[a] = b
            if ha == b:
                closed += 1
                closed_darts += clen[b]
                open_chains -= 1
            else:
                if strong:
                    for w in range(words):
                        if (cmask[ha, w] & cmask[b, w]) != 0:
                            bad += 1
                            break
                    if bad and prune:
                        ok = False
                        break
                tb = tail[b]
                top = _trail_push(trail, top, 2, ha, tail[ha])
                tail[ha] = tb
                top = _trail_push(trail, top, 1, tb, head[tb])
                head[tb] = ha
                top = _trail_push(trail, top, 3, ha, clen[ha])
                clen[ha] += clen[b]
                for w in range(words):
                    top = _trail_push(trail, top, 4 + w, ha, cmask[ha, w])
                    cmask[ha, w] |= cmask[b, w]
                open_chains -= 1
        if not ok:
            continue

        limit = control[1]
        if best >= 0 and best - 1 < limit:
            limit = best - 1
        if prune:
            # genus lower bound from the faces this branch can still close
            remaining = nd - closed_darts
            extra = remaining // min_face_len
            if open_chains < extra:
                extra = open_chains
            lb = (2 - n + m - closed - extra + 1) // 2
            if lb < genus_floor:
                lb = genus_floor
            if lb > limit:
                continue

        if depth == n - 1:
            genus = (2 - n + m - closed) // 2
            if genus > limit or bad > 0:
                continue
            best = genus
            for i in range(npre):
                witness[order[i]] = prefix[i]
            for i in range(npre, n):
                witness[order[i]] = cur[i]
            if genus < control[1]:
                control[1] = genus
            if genus <= genus_floor:
                status = DONE
                depth = -1
                break
            continue

        depth += 1
        cur[depth] = -1

    return best, nodes, status

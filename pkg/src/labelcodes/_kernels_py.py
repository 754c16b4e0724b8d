"""Pure-Python implementations of the hot kernels.

These functions carry the inner loops of labeling, reconstruction and the
classical-code primitives.  labelcodes.kernels selects between this module
and the compiled twin (_kernels_cy) at import time; both expose the same
names and must return identical values.

Conventions shared by both backends:
  * words and labeling words are tuples of small non-negative ints
  * `table` is a bytes object of length q*q mapping pair (a, b) -> label
    value at index a*q + b (0 for unlabeled pairs; the pair code itself
    for all-pairs sets)
  * `la` / `lb` are bytes mapping a label index to the first / second
    symbol of its pair (index 0 is padding)
  * `zero_adj` is a bytes adjacency matrix of the zero graph: entry
    a*q + b is 1 when the pair (a, b) carries no label
"""

BACKEND = "python"

# invert_framed_pairs status codes
OK = 0
INVALID = 1
AMBIGUOUS = 2


def derivative(x, q):
    """Mod-q difference word (x1, x2-x1, ..., xn-x_{n-1})."""
    out = []
    prev = 0
    for v in x:
        out.append((v - prev) % q)
        prev = v
    return tuple(out)


def integrate(d, q):
    """Inverse of derivative: running prefix sums mod q."""
    out = []
    acc = 0
    for v in d:
        acc = (acc + v) % q
        out.append(acc)
    return tuple(out)


def signature(x):
    """Binary monotonicity indicator: bit i is 1 iff x_{i+1} >= x_i."""
    n = len(x)
    return tuple(1 if x[i + 1] >= x[i] else 0 for i in range(n - 1))


def vt_weight_sum(x):
    """Weighted index sum: sum of (i+1) * x_i over 0-based positions."""
    acc = 0
    for i, v in enumerate(x):
        acc += (i + 1) * v
    return acc


def label_word_pairs(x, q, table):
    """Standalone labeling for a uniform length-2 label set.

    Position i (0-based) carries the label of the pair (x_i, x_{i+1});
    the final position is always 0 because no pair starts there.
    """
    n = len(x)
    out = [0] * n
    for i in range(n - 1):
        out[i] = table[x[i] * q + x[i + 1]]
    return tuple(out)


def label_framed_pairs(x, q, table, x0, xend):
    """Framed labeling: pairs of (x0, x, xend), one label per pair."""
    n = len(x)
    out = [0] * (n + 1)
    prev = x0
    for i in range(n):
        cur = x[i]
        out[i] = table[prev * q + cur]
        prev = cur
    out[n] = table[prev * q + xend]
    return tuple(out)


def invert_framed_pairs(u, q, la, lb, zero_adj, x0, xend, all_pairs):
    """Reconstruct the word whose framed labeling is u.

    Returns (status, symbols) where symbols is the interior word (the
    flanks stripped) when status == OK.  Pinned-symbol conflicts and
    impossible zero runs yield INVALID; a zero run admitting more than
    one zero-graph path yields AMBIGUOUS.
    """
    m = len(u)  # number of pairs; symbols c_0..c_m
    sym = [-1] * (m + 1)
    sym[0] = x0
    sym[m] = xend
    if all_pairs:
        for i in range(m):
            v = u[i]
            a = v // q
            b = v % q
            if sym[i] == -1:
                sym[i] = a
            elif sym[i] != a:
                return INVALID, None
            if sym[i + 1] == -1:
                sym[i + 1] = b
            elif sym[i + 1] != b:
                return INVALID, None
        return OK, tuple(sym[1:m])
    for i in range(m):
        v = u[i]
        if v > 0:
            a = la[v]
            b = lb[v]
            if sym[i] == -1:
                sym[i] = a
            elif sym[i] != a:
                return INVALID, None
            if sym[i + 1] == -1:
                sym[i + 1] = b
            elif sym[i + 1] != b:
                return INVALID, None
    # fill runs of unknown symbols by unique zero-graph paths
    i = 1
    while i < m:
        if sym[i] != -1:
            i += 1
            continue
        j = i
        while sym[j] == -1:
            j += 1
        # unknown run sym[i..j-1]; anchors sym[i-1], sym[j]
        steps = j - i + 1  # edges from anchor to anchor
        # back[t][v] = paths of length t from v to sym[j], capped at 2
        back = [[0] * q for _ in range(steps + 1)]
        back[0][sym[j]] = 1
        for t in range(1, steps + 1):
            row = back[t]
            prev_row = back[t - 1]
            for a in range(q):
                tot = 0
                base = a * q
                for b in range(q):
                    if zero_adj[base + b]:
                        tot += prev_row[b]
                        if tot > 2:
                            tot = 2
                            break
                row[a] = tot
        total = back[steps][sym[i - 1]]
        if total == 0:
            return INVALID, None
        if total > 1:
            return AMBIGUOUS, None
        cur = sym[i - 1]
        for t in range(steps, 1, -1):
            base = cur * q
            for b in range(q):
                if zero_adj[base + b] and back[t - 1][b] > 0:
                    cur = b
                    break
            sym[i] = cur
            i += 1
        i = j + 1
    # every zero pair must be an actual zero-graph edge
    for i in range(m):
        if u[i] == 0 and not zero_adj[sym[i] * q + sym[i + 1]]:
            return INVALID, None
    return OK, tuple(sym[1:m])

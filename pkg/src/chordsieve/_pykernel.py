"""Pure-Python enumeration kernel; the fallback when the compiled one is absent."""

UNMATCHED = -1


def _proper_divisors(N):
    return [d for d in range(1, N) if N % d == 0]


def _period(partner, N, divs):
    for d in divs:
        for i in range(N):
            if partner[(i + d) % N] != (partner[i] + d) % N:
                break
        else:
            return d
    return N


def _walk(n, kmax, leaf):
    # depth-first over perfect matchings of 2n points, smallest free point
    # first; leaf(partner, c) is called for each completed matching
    N = 2 * n
    partner = [UNMATCHED] * N

    def rec(depth, c):
        if depth == n:
            leaf(partner, c)
            return
        i = partner.index(UNMATCHED)
        seen = 0
        for j in range(i + 1, N):
            if partner[j] != UNMATCHED:
                seen += 1
                continue
            if c + seen > kmax:
                break
            partner[i] = j
            partner[j] = i
            rec(depth + 1, c + seen)
            partner[i] = partner[j] = UNMATCHED

    rec(0, 0)


def crossing_histogram(n, kmax):
    """Counts of matchings with c = 0..kmax crossings."""
    hist = [0] * (kmax + 1)

    def leaf(partner, c):
        hist[c] += 1

    _walk(n, kmax, leaf)
    return hist


def period_histogram(n, k):
    """``h[d]`` for d in 0..2n: matchings with exactly k crossings and period d."""
    N = 2 * n
    divs = _proper_divisors(N)
    hist = [0] * (N + 1)

    def leaf(partner, c):
        if c == k:
            hist[_period(partner, N, divs)] += 1

    _walk(n, k, leaf)
    return hist

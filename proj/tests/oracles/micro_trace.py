"""Brute-force search and replay of the 3-iteration m=7 golden trace.

Independent of the C++ engine: distances by enumerating wraps, rewards from
the shell tables, decisions by enumerating all nine actions. Finds a start
where a stigmergy local-search agent and an oracle share a cell before every
decision (so the stigmergy agent has no peer cells and no random fakes) and
the local-search maximum is unique, then prints the trace.
"""
import itertools

M = 7
# (name, dx, dy) in the library's enumeration order; up is -y.
ACTIONS = [("left", -1, 0), ("right", 1, 0), ("up", 0, -1), ("down", 0, 1),
           ("up-left", -1, -1), ("up-right", 1, -1), ("down-left", -1, 1),
           ("down-right", 1, 1), ("stay", 0, 0)]
GOOD = {0: 1.0, 1: 0.8, 2: 0.5, 3: 0.1}


def dist(a, b):
    return max(min(abs(a[i] - b[i] + k * M) for k in (-1, 0, 1)) for i in (0, 1))


def reward(c, g, e):
    return round(GOOD.get(dist(c, g), 0.0) - GOOD.get(dist(c, e), 0.0), 10)


def move(p, a):
    return ((p[0] + a[1]) % M, (p[1] + a[2]) % M)


def local_search(p, g, e):
    vals = [(reward(move(p, a), g, e), a) for a in ACTIONS]
    best = max(v for v, _ in vals)
    winners = [a for v, a in vals if v == best]
    return winners[0] if len(winners) == 1 else None


def oracle(p, g, e, gpat_action):
    nxt = move(g, gpat_action)
    best = None
    for a in ACTIONS:
        d = move(p, a)
        key = (dist(d, nxt), -reward(d, g, e))
        if best is None or key < best[0]:
            best = (key, a)
    return best[1]


def replay(start, g, e, gpat, epat, iters=3):
    sl = o = start
    rows = []
    for i in range(iters):
        if sl != o:
            return None
        a_sl = local_search(sl, g, e)
        if a_sl is None:
            return None
        a_o = oracle(o, g, e, gpat[i % len(gpat)])
        sl, o = move(sl, a_sl), move(o, a_o)
        g = move(g, gpat[i % len(gpat)])
        e = move(e, epat[i % len(epat)])
        rows.append((a_sl[0], sl, reward(sl, g, e), a_o[0], o, reward(o, g, e), g, e))
    return rows


def search():
    cells = [(x, y) for y in range(M) for x in range(M)]
    moves = [a for a in ACTIONS if a[0] != "stay"]
    for g, e, start in itertools.product(cells, cells, cells):
        if g == e or dist(start, g) < 2:
            continue
        for ga, gb in itertools.product(moves, repeat=2):
            for ea in [("stay", 0, 0)]:
                rows = replay(start, g, e, [ga, gb], [ea])
                if rows and rows[-1][1] == rows[-1][4] and len({r[2] for r in rows}) == 3:
                    return g, e, start, [ga[0], gb[0]], [ea[0]], rows
    return None


if __name__ == "__main__":
    g, e, start, gpat, epat, rows = search()
    print("good", g, "evil", e, "start", start, "good pattern", gpat, "evil pattern", epat)
    for i, r in enumerate(rows, 1):
        print(i, r)

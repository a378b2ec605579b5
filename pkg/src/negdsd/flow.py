"""Dinic max flow on integer capacities.

Capacities are Python ints, so arbitrarily large scaled weights are exact.
The solver exposes the residual sink side after a run, which is what the
density decision procedure needs to extract the largest optimal witness.
"""

from __future__ import annotations

from collections import deque


class Dinic:
    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add_edge(self, u: int, v: int, cap: int) -> None:
        """Directed arc u->v with the given capacity (reverse arc gets 0)."""
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _bfs(self, s: int, t: int) -> bool:
        self.level = [-1] * self.n
        self.level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.adj[u]:
                v = self.to[e]
                if self.cap[e] > 0 and self.level[v] < 0:
                    self.level[v] = self.level[u] + 1
                    queue.append(v)
        return self.level[t] >= 0

    def _blocking_flow(self, s: int, t: int) -> int:
        flow = 0
        it = [0] * self.n
        path: list[int] = []  # edge ids from s to the current node
        u = s
        while True:
            if u == t:
                bottleneck = min(self.cap[e] for e in path)
                cut_at = len(path)
                for i, e in enumerate(path):
                    self.cap[e] -= bottleneck
                    self.cap[e ^ 1] += bottleneck
                    if self.cap[e] == 0 and i < cut_at:
                        cut_at = i
                flow += bottleneck
                # retreat to the tail of the first saturated arc
                path = path[:cut_at]
                u = s if not path else self.to[path[-1]]
                continue
            advanced = False
            while it[u] < len(self.adj[u]):
                e = self.adj[u][it[u]]
                v = self.to[e]
                if self.cap[e] > 0 and self.level[v] == self.level[u] + 1:
                    path.append(e)
                    u = v
                    advanced = True
                    break
                it[u] += 1
            if not advanced:
                if u == s:
                    return flow
                self.level[u] = -1  # dead end, prune
                path.pop()
                u = s if not path else self.to[path[-1]]

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while self._bfs(s, t):
            total += self._blocking_flow(s, t)
        return total

    def residual_sink_side(self, t: int) -> set[int]:
        """Nodes that can still reach t in the residual network (t included).

        The complement is the largest source side over all minimum cuts.
        """
        side = {t}
        queue = deque([t])
        while queue:
            u = queue.popleft()
            for e in self.adj[u]:
                v = self.to[e]
                # residual capacity of arc v->u is stored on the paired edge
                if v not in side and self.cap[e ^ 1] > 0:
                    side.add(v)
                    queue.append(v)
        return side

"""Canonical labeling of vertex-colored digraphs.

Individualization-refinement search in the style of nauty:

* refinement splits cells by (arcs received from, arcs sent to) a splitter
  cell until the ordered partition is equitable;
* the target cell at every node is the first smallest non-singleton cell;
* the canonical leaf is the one minimizing (refinement trace, relabeled
  graph); subtrees whose trace already exceeds the best leaf's and differs
  from the first leaf's are cut;
* leaves that reproduce the first or best graph yield automorphisms, used for
  orbit pruning and, on the first path, for the exact group order
  (product of stabilizer orbit lengths).
"""
from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence


@dataclass
class CanonResult:
    order: list[int]              # order[p] = vertex placed at position p
    graph: tuple[int, ...]        # out-neighbour bitmask per canonical position
    group_order: int
    generators: list[list[int]] = field(default_factory=list)
    nodes: int = 0


class _Partition:
    __slots__ = ("lab", "cellof", "cellend", "ncells")

    def __init__(self, lab, cellof, cellend, ncells):
        self.lab = lab
        self.cellof = cellof
        self.cellend = cellend
        self.ncells = ncells

    def copy(self) -> "_Partition":
        return _Partition(self.lab[:], self.cellof[:], self.cellend[:], self.ncells)


class _Labeler:
    def __init__(self, nv: int, colors: Sequence[int], out_adj: Sequence[Sequence[int]]):
        self.nv = nv
        self.colors = list(colors)
        self.out_adj = [list(a) for a in out_adj]
        in_adj: list[list[int]] = [[] for _ in range(nv)]
        for u, nbrs in enumerate(self.out_adj):
            for v in nbrs:
                in_adj[v].append(u)
        self.symmetric = all(sorted(a) == sorted(b) for a, b in zip(self.out_adj, in_adj))
        self.in_adj = in_adj
        self.big = nv + 1
        self._cnt = [0] * nv

        self.gens: list[list[int]] = []
        self.first = None           # (lab, graph, path, traces)
        self.best = None
        self.orbit_sizes: dict[int, int] = {}
        self.nodes = 0
        self._orbit_cache: dict[tuple, tuple[int, list[int]]] = {}

    # -- refinement -----------------------------------------------------

    def _refine(self, part: _Partition, queue: list[int]) -> tuple:
        lab, cellof, cellend = part.lab, part.cellof, part.cellend
        out_adj, in_adj, big = self.out_adj, self.in_adj, self.big
        sym = self.symmetric
        nv = self.nv
        cnt = self._cnt
        trace = []
        q = deque(queue)
        inq = set(queue)
        while q and part.ncells < nv:
            s = q.popleft()
            inq.discard(s)
            touched = []
            for u in lab[s:cellend[s]]:
                for v in out_adj[u]:
                    c = cnt[v]
                    if not c:
                        touched.append(v)
                    cnt[v] = c + big
                if not sym:
                    for v in in_adj[u]:
                        c = cnt[v]
                        if not c:
                            touched.append(v)
                        cnt[v] = c + 1
            for cs in sorted({cellof[v] for v in touched}):
                ce = cellend[cs]
                if ce - cs == 1:
                    continue
                members = lab[cs:ce]
                k0 = cnt[members[0]]
                for v in members:
                    if cnt[v] != k0:
                        break
                else:
                    continue
                groups: dict[int, list[int]] = {}
                for v in members:
                    key = cnt[v]
                    g = groups.get(key)
                    if g is None:
                        groups[key] = [v]
                    else:
                        g.append(v)
                keys = sorted(groups)
                pos = cs
                starts = []
                sig = []
                for key in keys:
                    grp = groups[key]
                    end = pos + len(grp)
                    lab[pos:end] = grp
                    for v in grp:
                        cellof[v] = pos
                    cellend[pos] = end
                    starts.append(pos)
                    sig.append(key)
                    sig.append(len(grp))
                    pos = end
                part.ncells += len(keys) - 1
                trace.append((cs, tuple(sig)))
                if cs in inq:
                    new = starts[1:]
                else:
                    sizes = [cellend[st] - st for st in starts]
                    skip = starts[sizes.index(max(sizes))]
                    new = [st for st in starts if st != skip]
                for st in new:
                    if st not in inq:
                        inq.add(st)
                        q.append(st)
            for v in touched:
                cnt[v] = 0
        trace.append(part.ncells)
        return tuple(trace)

    def _initial(self) -> tuple[_Partition, tuple]:
        order = sorted(range(self.nv), key=lambda v: (self.colors[v], v))
        cellof = [0] * self.nv
        cellend = [0] * (self.nv + 1)
        starts = []
        pos = 0
        while pos < self.nv:
            c = self.colors[order[pos]]
            end = pos
            while end < self.nv and self.colors[order[end]] == c:
                end += 1
            for v in order[pos:end]:
                cellof[v] = pos
            cellend[pos] = end
            starts.append(pos)
            pos = end
        part = _Partition(order, cellof, cellend, len(starts))
        sig = tuple(sorted({(c, self.colors.count(c)) for c in set(self.colors)}))
        return part, (sig,) + self._refine(part, starts)

    def _individualize(self, part: _Partition, v: int) -> tuple:
        lab, cellof, cellend = part.lab, part.cellof, part.cellend
        s = cellof[v]
        e = cellend[s]
        i = lab.index(v, s, e)
        lab[s], lab[i] = lab[i], lab[s]
        cellend[s + 1] = e
        cellend[s] = s + 1
        for w in lab[s + 1:e]:
            cellof[w] = s + 1
        part.ncells += 1
        return self._refine(part, [s])

    # -- helpers ---------------------------------------------------------

    def _target(self, part: _Partition) -> int:
        best_s, best_size = -1, self.nv + 1
        s = 0
        cellend = part.cellend
        while s < self.nv:
            size = cellend[s] - s
            if 1 < size < best_size:
                best_s, best_size = s, size
                if size == 2:
                    break
            s = cellend[s]
        return best_s

    def _graph(self, lab: list[int]) -> tuple[int, ...]:
        pos = [0] * self.nv
        for p, v in enumerate(lab):
            pos[v] = p
        out = self.out_adj
        return tuple(sum(1 << pos[w] for w in out[v]) for v in lab)

    def _orbits(self, path: list[int]) -> list[int]:
        """Orbit representatives under generators fixing ``path`` pointwise."""
        key = tuple(path)
        hit = self._orbit_cache.get(key)
        if hit is not None and hit[0] == len(self.gens):
            return hit[1]
        parent = list(range(self.nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if any(g[p] != p for p in path):
                continue
            for x in range(self.nv):
                y = g[x]
                if y != x:
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        if rx < ry:
                            parent[ry] = rx
                        else:
                            parent[rx] = ry
        reps = [find(x) for x in range(self.nv)]
        self._orbit_cache[key] = (len(self.gens), reps)
        return reps

    def _add_gen(self, src_lab: list[int], dst_lab: list[int]) -> None:
        g = [0] * self.nv
        for a, b in zip(src_lab, dst_lab):
            g[a] = b
        if any(g[x] != x for x in range(self.nv)):
            self.gens.append(g)

    # -- search ----------------------------------------------------------

    def run(self) -> CanonResult:
        part, trace = self._initial()
        self._dfs(part, [], [trace], True)
        lab, graph = self.best[0], self.best[1]
        order = 1
        for size in self.orbit_sizes.values():
            order *= size
        return CanonResult(list(lab), graph, order, self.gens, self.nodes)

    def _leaf(self, part: _Partition, path: list[int], traces: list, eq_first: bool) -> int:
        lab = part.lab
        graph = self._graph(lab)
        if self.first is None:
            self.first = self.best = (lab[:], graph, path[:], traces)
            return len(path)
        if eq_first and graph == self.first[1]:
            self._add_gen(self.first[0], lab)
            return _common(path, self.first[2])
        bt = self.best[3]
        if traces == bt:
            if graph == self.best[1]:
                self._add_gen(self.best[0], lab)
                return _common(path, self.best[2])
            if graph < self.best[1]:
                self.best = (lab[:], graph, path[:], traces)
        elif traces < bt:
            self.best = (lab[:], graph, path[:], traces)
        return len(path)

    def _dfs(self, part: _Partition, path: list[int], traces: list, eq_first: bool) -> int:
        self.nodes += 1
        level = len(path)
        if part.ncells == self.nv:
            return self._leaf(part, path, traces, eq_first)
        s = self._target(part)
        cell = part.lab[s:part.cellend[s]]
        explored: list[int] = []
        for v in cell:
            if explored:
                reps = self._orbits(path)
                if any(reps[v] == reps[u] for u in explored):
                    continue
            explored.append(v)
            child = part.copy()
            t = self._individualize(child, v)
            ctraces = traces + [t]
            if self.first is None:
                c_eq = True
            else:
                ft = self.first[3]
                c_eq = eq_first and len(ft) > level + 1 and ft[level + 1] == t
                if not c_eq and ctraces > self.best[3][:level + 2]:
                    continue
            ret = self._dfs(child, path + [v], ctraces, c_eq)
            if ret < level:
                return ret
        if eq_first and path == self.first[2][:level]:
            reps = self._orbits(path)
            r = reps[self.first[2][level]]
            self.orbit_sizes[level] = sum(1 for x in cell if reps[x] == r)
        return level


def _common(a: list[int], b: list[int]) -> int:
    i = 0
    for x, y in zip(a, b):
        if x != y:
            break
        i += 1
    return i


def canonical_form(nv: int, colors: Sequence[int], out_adj: Sequence[Sequence[int]]) -> CanonResult:
    """Canonical order, canonical graph and automorphism group order."""
    if nv == 0:
        return CanonResult([], (), 1)
    limit = sys.getrecursionlimit()
    if limit < nv + 100:
        sys.setrecursionlimit(nv + 100)
    return _Labeler(nv, colors, out_adj).run()

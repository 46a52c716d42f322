"""Dominions, zigzag certificates, and saturation scans.

Membership is decided on pairs of S^1 x S^1 (S^1 here always carries a fresh
identity, index n): d is dominated by U exactly when (1, d) and (d, 1) are
joined by the relators (xu, y) ~ (x, uy), u in U.  An independent
breadth-first zigzag search serves as oracle and certificate producer.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .core import Semigroup, SubsetHandle, idempotents
from .enumeration import DEFAULT_BUDGET, extensions
from .errors import NotClosedSubset, PreconditionFailed
from .relations import is_archimedean


@dataclass(frozen=True)
class ZigzagWitness:
    """d = a0 t1 = y1 a1 t1 = y1 a2 t2 = ... = ym a(2m-1) tm = ym a(2m)."""

    value: int
    length: int
    spine: tuple[int, ...]
    left_wings: tuple[int, ...]
    right_wings: tuple[int, ...]


@dataclass(frozen=True)
class ZigzagCheck:
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


SubsetLike = Union[SubsetHandle, Iterable[int]]


def as_handle(S: Semigroup, U: SubsetLike) -> SubsetHandle:
    if isinstance(U, SubsetHandle):
        if U.parent is not S and U.parent != S:
            raise NotClosedSubset("subset belongs to a different semigroup")
        return U
    return SubsetHandle(S, tuple(U))


class TensorClosure:
    """Union-find over S^1 x S^1 under (xu, y) ~ (x, uy), with a proof forest.

    Every successful union is kept as an edge labelled by its relator
    ``(x, u, y)``; paths in this forest are replayed to build certificates.
    """

    def __init__(self, S: Semigroup, U: SubsetLike) -> None:
        self.S = S
        self.U = as_handle(S, U)
        n = S.order
        self.one = n
        N = n + 1
        self.N = N
        t = S.table
        ext = [list(row) + [i] for i, row in enumerate(t)]
        ext.append(list(range(N)))
        self._ext = ext
        parent = list(range(N * N))
        size = [1] * (N * N)
        self._edges: dict[int, list[tuple[int, tuple[int, int, int]]]] = defaultdict(list)

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u in self.U.members:
            col_u = [ext[x][u] for x in range(N)]
            row_u = ext[u]
            for x in range(N):
                xu = col_u[x]
                for y in range(N):
                    p = xu * N + y
                    q = x * N + row_u[y]
                    rp, rq = find(p), find(q)
                    if rp == rq:
                        continue
                    if size[rp] < size[rq]:
                        rp, rq = rq, rp
                    parent[rq] = rp
                    size[rp] += size[rq]
                    label = (x, u, y)
                    self._edges[p].append((q, label))
                    self._edges[q].append((p, label))
        self._find = find

    def pair(self, x: int, y: int) -> int:
        return x * self.N + y

    def same(self, p: tuple[int, int], q: tuple[int, int]) -> bool:
        return self._find(self.pair(*p)) == self._find(self.pair(*q))

    def dominated(self, d: int) -> bool:
        return d in self.U.member_set or self.same((self.one, d), (d, self.one))

    def members(self) -> tuple[int, ...]:
        return tuple(d for d in self.S if self.dominated(d))

    def explain(self, p: tuple[int, int], q: tuple[int, int]) -> Optional[list[tuple[tuple[int, int], tuple[int, int, int]]]]:
        """Path of relator steps from p to q in the proof forest.

        Returns ``[(pair_k, relator_k), ...]`` where step k leads from pair_k to
        the next pair; the final pair is q.  None if p and q are unrelated.
        """
        start, goal = self.pair(*p), self.pair(*q)
        if self._find(start) != self._find(goal):
            return None
        prev: dict[int, tuple[int, tuple[int, int, int]]] = {start: (start, (0, 0, 0))}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            if node == goal:
                break
            for nxt, label in self._edges[node]:
                if nxt not in prev:
                    prev[nxt] = (node, label)
                    queue.append(nxt)
        steps = []
        node = goal
        while node != start:
            before, label = prev[node]
            steps.append((divmod(before, self.N), label))
            node = before
        steps.reverse()
        return steps

    def certify(self, d: int) -> Optional[ZigzagWitness]:
        """Fold the proof path from (1, d) to (d, 1) into a zigzag, if d is outside U."""
        if d in self.U.member_set:
            return None
        steps = self.explain((self.one, d), (d, self.one))
        if steps is None:
            return None
        w = _fold_chain(self, d, steps)
        if w is None or not validate_zigzag(self.S, self.U, w):
            return None
        return w


def _fold_chain(tc: TensorClosure, d: int, steps) -> Optional[ZigzagWitness]:
    one = tc.one
    ext = tc._ext
    inU = tc.U.member_set
    pairs = [p for p, _ in steps] + [(d, one)]

    def unit(x: int) -> bool:
        return x == one or x in inU

    i = max(k for k, p in enumerate(pairs) if unit(p[0]))
    j = next(k for k in range(i + 1, len(pairs)) if unit(pairs[k][1]))

    # moves: (direction, u, pair after); "RL" moves u from right to left
    moves: list[tuple[str, int, tuple[int, int]]] = []
    if pairs[i][0] != one:
        moves.append(("RL", pairs[i][0], pairs[i]))
    for k in range(i, j):
        x, u, y = steps[k][1]
        before, after = pairs[k], pairs[k + 1]
        left_form, right_form = (ext[x][u], y), (x, ext[u][y])
        if before == left_form and after == right_form:
            moves.append(("LR", u, after))
        elif before == right_form and after == left_form:
            moves.append(("RL", u, after))
        else:
            return None
    if pairs[j][1] != one:
        moves.append(("RL", pairs[j][1], (d, one)))

    merged: list[list] = []
    for direction, u, after in moves:
        if merged and merged[-1][0] == direction:
            prev_u = merged[-1][1]
            merged[-1][1] = ext[prev_u][u] if direction == "RL" else ext[u][prev_u]
            merged[-1][2] = after
        else:
            merged.append([direction, u, after])
    if len(merged) % 2 == 0 or merged[0][0] != "RL" or merged[-1][0] != "RL":
        return None
    m = len(merged) // 2
    spine = tuple(u for _, u, _ in merged)
    right = tuple(merged[2 * k][2][1] for k in range(m))
    left = tuple(merged[2 * k + 1][2][0] for k in range(m))
    return ZigzagWitness(d, m, spine, left, right)


def dominion(S: Semigroup, U: SubsetLike) -> SubsetHandle:
    tc = TensorClosure(S, U)
    members = tc.members()
    # A dominion is always a subsemigroup; SubsetHandle re-checks closure.
    return SubsetHandle(S, members)


def validate_zigzag(S: Semigroup, U: SubsetLike, w: ZigzagWitness) -> ZigzagCheck:
    """Re-check every zigzag equation against the table; independent of any search."""
    uset = set(as_handle(S, U).members) if not isinstance(U, SubsetHandle) else U.member_set
    n = S.order
    t = S.table
    m = w.length
    a, y, tw = w.spine, w.left_wings, w.right_wings
    if m < 1:
        return ZigzagCheck(False, "length must be at least 1")
    if len(a) != 2 * m + 1 or len(y) != m or len(tw) != m:
        return ZigzagCheck(False, "spine/wing lengths do not match m")
    for x in (w.value, *a, *y, *tw):
        if not 0 <= x < n:
            return ZigzagCheck(False, f"element {x} out of range")
    for k, x in enumerate(a):
        if x not in uset:
            return ZigzagCheck(False, f"spine a{k} not in U")
    for k in range(m):
        if y[k] in uset:
            return ZigzagCheck(False, f"wing y{k + 1} lies in U")
        if tw[k] in uset:
            return ZigzagCheck(False, f"wing t{k + 1} lies in U")
    d = w.value
    if t[a[0]][tw[0]] != d:
        return ZigzagCheck(False, "d != a0 t1")
    if t[y[m - 1]][a[2 * m]] != d:
        return ZigzagCheck(False, "d != ym a2m")
    if a[0] != t[y[0]][a[1]]:
        return ZigzagCheck(False, "a0 != y1 a1")
    if t[a[2 * m - 1]][tw[m - 1]] != a[2 * m]:
        return ZigzagCheck(False, "a(2m-1) tm != a2m")
    for i in range(1, m):
        if t[a[2 * i - 1]][tw[i - 1]] != t[a[2 * i]][tw[i]]:
            return ZigzagCheck(False, f"a{2 * i - 1} t{i} != a{2 * i} t{i + 1}")
        if t[y[i - 1]][a[2 * i]] != t[y[i]][a[2 * i + 1]]:
            return ZigzagCheck(False, f"y{i} a{2 * i} != y{i + 1} a{2 * i + 1}")
    return ZigzagCheck(True)


_START = ("S",)
_END = ("E",)


def zigzag_search(S: Semigroup, U: SubsetLike, d: int, max_length: Optional[int] = None) -> Optional[ZigzagWitness]:
    """Shortest zigzag over U with value d, lexicographically least spine.

    States record the wing still to be used and the product the next spine
    step must reproduce, so the state space has at most 2|S|^2 + 2 nodes.
    """
    U = as_handle(S, U)
    S.check(d)
    n = S.order
    if max_length is None:
        max_length = n * n
    t = S.table
    in_u = [x in U.member_set for x in range(n)]
    spine_elems = U.members
    wings = [x for x in range(n) if not in_u[x]]
    # y a = p  (y outside U, a in U), and a t = q  (a in U, t outside U)
    left_f: dict[int, list[tuple[int, int]]] = defaultdict(list)
    right_f: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for y in wings:
        for a in spine_elems:
            left_f[t[y][a]].append((a, y))
    for a in spine_elems:
        for w in wings:
            right_f[t[a][w]].append((a, w))

    def successors(state):
        kind = state[0]
        if kind == "S":
            for a, w in right_f[d]:
                yield a, ("L", w, a)
        elif kind == "L":
            _, w, p = state
            for a, y in left_f[p]:
                yield a, ("R", y, t[a][w])
        elif kind == "R":
            _, y, q = state
            for a, w in right_f[q]:
                yield a, ("L", w, t[y][a])
            if in_u[q]:
                yield q, _END

    # reachable graph, then distance to the end state
    preds: dict[tuple, list[tuple]] = defaultdict(list)
    seen = {_START}
    queue = deque([_START])
    while queue:
        s = queue.popleft()
        for _, s2 in successors(s):
            preds[s2].append(s)
            if s2 not in seen:
                seen.add(s2)
                queue.append(s2)
    if _END not in seen:
        return None
    dist = {_END: 0}
    queue = deque([_END])
    while queue:
        s = queue.popleft()
        for p in preds[s]:
            if p not in dist:
                dist[p] = dist[s] + 1
                queue.append(p)
    total = dist[_START]
    m = (total - 1) // 2
    if m > max_length:
        return None

    frontier = [_START]
    layers: list[dict[tuple, tuple]] = []
    spine: list[int] = []
    for step in range(total):
        remaining = total - step
        best: Optional[int] = None
        nxt: dict[tuple, tuple] = {}
        for s in frontier:
            for label, s2 in successors(s):
                if dist.get(s2) != remaining - 1:
                    continue
                if best is None or label < best:
                    best, nxt = label, {}
                if label == best and s2 not in nxt:
                    nxt[s2] = s
        spine.append(best)
        layers.append(nxt)
        frontier = sorted(nxt)
    path = [_END]
    for layer in reversed(layers):
        path.append(layer[path[-1]])
    path.reverse()
    right = tuple(s[1] for s in path if s[0] == "L")
    left = tuple(s[1] for s in path if s[0] == "R")
    return ZigzagWitness(d, m, tuple(spine), left, right)


def is_closed(S: Semigroup, U: SubsetLike) -> bool:
    U = as_handle(S, U)
    return dominion(S, U).members == U.members


def is_dense(S: Semigroup, U: SubsetLike) -> bool:
    return len(dominion(S, U)) == S.order


def dominion_hc_check(S: Semigroup, U: SubsetLike) -> bool:
    """Whether Dom(U, S) is H-commutative, for H-commutative U."""
    from .hcomm import is_h_commutative

    U = as_handle(S, U)
    if not is_h_commutative(U.materialize()):
        raise PreconditionFailed("U is not H-commutative")
    return bool(is_h_commutative(dominion(S, U).materialize()))


@dataclass(frozen=True)
class ScanSummary:
    candidates: int
    dense: tuple[Semigroup, ...]


def scan_extensions(S: Semigroup, extra: int, budget: Optional[int] = DEFAULT_BUDGET) -> ScanSummary:
    """All extensions of S by ``extra`` elements, and those in which S is dense."""
    prefix = tuple(range(S.order))
    count = 0
    dense = []
    for T in extensions(S, extra, budget):
        count += 1
        if TensorClosure(T, prefix).members() == tuple(range(T.order)):
            dense.append(T)
    return ScanSummary(count, tuple(dense))


def saturation_scan(S: Semigroup, extra: int, budget: Optional[int] = DEFAULT_BUDGET) -> list[Semigroup]:
    return list(scan_extensions(S, extra, budget).dense)


def archimedean_saturation_check(S: Semigroup, budget: Optional[int] = DEFAULT_BUDGET) -> bool:
    """Saturation of an H-commutative archimedean semigroup with an idempotent.

    Confirms the principal right ideal chains of every element stabilise,
    then scans one-element extensions for a dense embedding.
    """
    from .hcomm import is_h_commutative, right_ideal_chain_index

    if not is_h_commutative(S):
        raise PreconditionFailed("semigroup is not H-commutative")
    if not is_archimedean(S):
        raise PreconditionFailed("semigroup is not archimedean")
    if not idempotents(S):
        raise PreconditionFailed("semigroup has no idempotent")
    for a in S:
        right_ideal_chain_index(S, a)
    return not saturation_scan(S, 1, budget)

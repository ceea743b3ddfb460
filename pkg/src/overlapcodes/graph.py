"""The bipartite prefix/suffix incompatibility graph and exact searches on it.

For a width k, prefix vertices x_p and suffix vertices y_s (p, s ranging
over all k-bit words) are joined when some prefix of p equals a suffix of
s: such a pair can never serve as the outer ends of codewords in a code
forbidding overlaps of size <= k. Independent sets with vertices on both
sides therefore describe codes, of size |X| * |Y| * 2^(n-2k).

The searches exploit the two-sided reduction: a non-trivial independent
set lies (up to complementing every bit) inside X_0 u Y_1, the prefixes
starting 0 and suffixes ending 1, and the suffix side can always be taken
maximal. Enumeration is over subsets of X_0 only, with branch and bound.
"""

import time
from dataclasses import dataclass
from typing import Optional

from .counting import SymbolicSize
from .errors import CapacityError, DomainError
from .words import BitWord, int_overlap

GRAPH_MAX_K = 16
SEARCH_EXACT_K = 6


def adjacent(p: int, s: int, k: int) -> bool:
    """Edge predicate of the incompatibility graph."""
    return any(int_overlap(p, s, k, t) for t in range(1, k + 1))


class OverlapGraph:
    """Adjacency of the incompatibility graph, one 2^k-bit row per prefix."""

    def __init__(self, k: int, rows: list[int]):
        self.k = k
        self.rows = rows

    def neighbors_of_prefix(self, p: int) -> int:
        """Bitmask over suffix words adjacent to x_p."""
        return self.rows[p]

    def has_edge(self, p: int, s: int) -> bool:
        return (self.rows[p] >> s) & 1 == 1


def build_overlap_graph(k: int) -> OverlapGraph:
    if not 1 <= k <= GRAPH_MAX_K:
        raise CapacityError(f"adjacency table covers 1 <= k <= {GRAPH_MAX_K}")
    # row(p) = union over t of the periodic mask {s : s mod 2^t == prefix_t(p)}
    size = 1 << k
    period_masks = []
    for t in range(1, k + 1):
        step = 1 << t
        base = 0
        for s in range(0, size, step):
            base |= 1 << s
        period_masks.append(base)
    rows = []
    for p in range(size):
        row = 0
        for t in range(1, k + 1):
            row |= period_masks[t - 1] << (p >> (k - t))
        rows.append(row)
    return OverlapGraph(k, rows)


@dataclass(frozen=True)
class SearchResult:
    """A verified two-sided independent set plus its objective values."""

    k: int
    prefix_words: tuple[BitWord, ...]
    suffix_words: tuple[BitWord, ...]
    product: int
    cardinality: int
    optimal: bool = True

    @property
    def x_size(self) -> int:
        return len(self.prefix_words)

    @property
    def y_size(self) -> int:
        return len(self.suffix_words)

    def code_size(self) -> SymbolicSize:
        return SymbolicSize(self.product, 2 * self.k)


def _verify_independent(k: int, xs: list[int], ys: list[int]):
    for p in xs:
        for s in ys:
            if adjacent(p, s, k):
                raise AssertionError(
                    f"search produced a non-independent pair ({p:0{k}b}, {s:0{k}b})"
                )


def _result(k, xs, ys, objective, optimal):
    _verify_independent(k, xs, ys)
    return SearchResult(
        k=k,
        prefix_words=tuple(BitWord(k, p) for p in sorted(xs)),
        suffix_words=tuple(BitWord(k, s) for s in sorted(ys)),
        product=len(xs) * len(ys),
        cardinality=len(xs) + len(ys),
        optimal=optimal,
    )


class _Budget:
    def __init__(self, seconds: Optional[float]):
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.expired = False
        self._tick = 0

    def spent(self) -> bool:
        if self.deadline is None:
            return False
        self._tick += 1
        if self._tick & 0x3FF == 0 and time.monotonic() > self.deadline:
            self.expired = True
        return self.expired

    def check_now(self) -> bool:
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.expired = True
        return self.expired


def _two_sided_search(
    k: int,
    objective: str,
    x_candidates: list[int],
    y_universe: list[int],
    budget: _Budget,
    preset_x: tuple[int, ...] = (),
):
    """Maximize (objective, the other objective) lexicographically over
    pairs (X, Y): X a subset of the candidates plus the preset words, Y all
    compatible suffixes.

    Returns (best value pair, x list, y mask). The suffix side is forced
    maximal, which never hurts either objective; candidates whose live
    neighborhoods are empty are pulled in for the same reason.
    """
    nbr = []
    for p in x_candidates:
        if budget.check_now():
            # truncated candidate list: any result is still a verified
            # independent set, just flagged non-optimal by the caller
            x_candidates = x_candidates[: len(nbr)]
            break
        mask = 0
        for i, s in enumerate(y_universe):
            if adjacent(p, s, k):
                mask |= 1 << i
        nbr.append(mask)
    m = len(x_candidates)
    order = sorted(range(m), key=lambda i: -nbr[i].bit_count())
    nbr = [nbr[i] for i in order]
    full = (1 << len(y_universe)) - 1
    for p in preset_x:
        for i, s in enumerate(y_universe):
            if adjacent(p, s, k):
                full &= ~(1 << i)
    product_first = objective == "product"

    best = [(0, 0), [], 0]

    def value(xc: int, yc: int):
        return (xc * yc, xc + yc) if product_first else (xc + yc, xc * yc)

    def dfs(i: int, xcount: int, xset: list[int], ymask: int):
        if budget.spent() or not ymask:
            return
        free = [j for j in range(i, m) if nbr[j] & ymask == 0]
        xc = xcount + len(free)
        yc = ymask.bit_count()
        if xc:
            v = value(xc, yc)
            if v > best[0]:
                best[0], best[1], best[2] = v, xset + free, ymask
        rem = m - i
        bound = (
            ((xcount + rem) * yc, xcount + rem + yc)
            if product_first
            else (xcount + rem + yc, (xcount + rem) * yc)
        )
        if bound <= best[0]:
            return
        for j in range(i, m):
            live = nbr[j] & ymask
            if not live:
                continue
            ahead = [f for f in free if f < j]
            dfs(j + 1, xcount + len(ahead) + 1, xset + ahead + [j], ymask & ~live)

    dfs(0, len(preset_x), [], full)
    xs = sorted(
        list(preset_x) + [x_candidates[order[i]] for i in best[1]]
    )
    ys = [y_universe[i] for i in range(len(y_universe)) if (best[2] >> i) & 1]
    return best[0], xs, ys


def _run_search(
    g: OverlapGraph,
    objective: str,
    time_budget: Optional[float],
    reduced: bool,
    canonical: bool = False,
) -> SearchResult:
    if objective not in ("product", "cardinality"):
        raise DomainError(f"unknown objective {objective!r}")
    k = g.k
    if k > SEARCH_EXACT_K and time_budget is None and reduced:
        time_budget = 60.0
    budget = _Budget(time_budget)
    if reduced:
        xs_cand = list(range(1 << (k - 1)))  # words starting 0
        ys_univ = [s for s in range(1 << k) if s & 1]  # words ending 1
    else:
        xs_cand = list(range(1 << k))
        ys_univ = list(range(1 << k))
    target, xs, ys = _two_sided_search(k, objective, xs_cand, ys_univ, budget)
    if canonical and not budget.expired:
        xs, ys = _lex_smallest(k, objective, xs_cand, ys_univ, target)
    return _result(k, xs, ys, objective, optimal=not budget.expired)


def _lex_smallest(k, objective, xs_cand, ys_univ, target):
    """Greedy refinement: the optimum whose sorted prefix list is smallest.

    Words are decided in ascending order; one is kept iff some optimum
    extends the decisions so far with it included. Ties in list length are
    resolved as if absent entries sorted last.
    """
    chosen: list[int] = []
    for pos, cand in enumerate(xs_cand):
        rest = xs_cand[pos + 1:]
        got, _, _ = _two_sided_search(
            k, objective, rest, ys_univ, _Budget(None),
            preset_x=tuple(chosen) + (cand,),
        )
        if got >= target:
            chosen.append(cand)
    got, xs, ys = _two_sided_search(
        k, objective, [], ys_univ, _Budget(None), preset_x=tuple(chosen)
    )
    if got != target:
        raise AssertionError("canonical refinement lost the optimum")
    return xs, ys


def max_product_search(
    g: OverlapGraph,
    time_budget: Optional[float] = None,
    canonical: bool = False,
) -> SearchResult:
    """Non-trivial independent set maximizing |X| * |Y|.

    Among product-optimal sets the one of largest cardinality is returned,
    so .cardinality is the published per-k reference cardinality. Exact for
    k <= 6; beyond that a time budget applies and the result may carry
    optimal=False. With canonical=True the prefix side is additionally the
    lexicographically smallest one attaining the optimum.
    """
    return _run_search(g, "product", time_budget, reduced=True, canonical=canonical)


def max_cardinality_search(
    g: OverlapGraph,
    time_budget: Optional[float] = None,
    canonical: bool = False,
) -> SearchResult:
    """Non-trivial independent set maximizing |X| + |Y| outright.

    The optimum equals 2^(k-1) + 1 (see mis_matching_certificate, whose
    extremal set attains the matching upper bound); the search recovers it
    independently for small k.
    """
    return _run_search(
        g, "cardinality", time_budget, reduced=True, canonical=canonical
    )


def unreduced_search(g: OverlapGraph, objective: str) -> SearchResult:
    """Reduction-free exhaustive variant, for cross-checking small k."""
    if g.k > 5:
        raise CapacityError("unreduced search is a cross-check tool for k <= 5")
    return _run_search(g, objective, None, reduced=False)


# ---------------------------------------------------------------------------
# explicit matching certificate for the cardinality ceiling 2^(k-1) + 1


@dataclass(frozen=True)
class MatchingCertificate:
    """A perfect-but-two matching of X_0 x Y_1 plus the extremal set.

    The matching (size 2^(k-1) - 1, every pair an edge) shows any
    independent set inside X_0 u Y_1 has at most 2^(k-1) + 1 vertices: each
    matched edge contributes at most one vertex, plus the two unmatched
    ones. The extremal set {all-zeros prefix} u Y_1 attains that, so the
    two halves pin the non-trivial maximum exactly.
    """

    k: int
    matching: tuple[tuple[BitWord, BitWord], ...]
    extremal: SearchResult


def mis_matching_certificate(k: int) -> MatchingCertificate:
    if not 2 <= k <= GRAPH_MAX_K:
        raise DomainError(f"need 2 <= k <= {GRAPH_MAX_K}")
    pairs: list[tuple[int, int]] = []
    # identity part: p starts 0 and ends 1, matched with its own suffix vertex
    for p in range(1 << (k - 1)):
        if p & 1:
            pairs.append((p, p))
    # swap part: p = v || 1 || 0^m (v starting 0, m >= 1 trailing zeros)
    # pairs with s = 1^m || v || 1. The edge is the full shared block v || 1
    # (overlap size k - m), and (m, v) is recoverable from s because the
    # leading 1-run of s has length exactly m, so the map is injective.
    for p in range(1 << (k - 1)):
        if p & 1 or p == 0:
            continue
        m = (p & -p).bit_length() - 1
        v = p >> (m + 1)
        s = (((1 << m) - 1) << (k - m)) | (v << 1) | 1
        pairs.append((p, s))
    for p, s in pairs:
        if not adjacent(p, s, k):
            raise AssertionError(f"certificate pair ({p:0{k}b}, {s:0{k}b}) is not an edge")
        if p >> (k - 1) or not s & 1:
            raise AssertionError("certificate pair escapes X_0 x Y_1")
    if len({p for p, _ in pairs}) != len(pairs) or len({s for _, s in pairs}) != len(pairs):
        raise AssertionError("certificate pairs do not form a matching")
    if len(pairs) != (1 << (k - 1)) - 1:
        raise AssertionError("certificate matching has the wrong size")

    ys = [s for s in range(1 << k) if s & 1]
    extremal = _result(k, [0], ys, "cardinality", optimal=True)
    return MatchingCertificate(
        k=k,
        matching=tuple(
            (BitWord(k, p), BitWord(k, s)) for p, s in sorted(pairs)
        ),
        extremal=extremal,
    )

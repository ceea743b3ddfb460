"""Codes, prefix/suffix systems, overlap verification, and the exact oracle.

A code is a set of equal-length words; it is overlap-free for a range
[t1, t2] when no ordered pair of codewords (a word paired with itself
included) has a t-prefix of one equal to a t-suffix of the other for any t
in the range. Prefix/suffix systems (P, S) generate such codes as
p || middle || s; they are valid exactly when no t-prefix of P meets a
t-suffix of S.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, TextIO

from .errors import CapacityError, DomainError
from .words import MAX_BITS, BitWord, int_overlap, int_to_bits

# refuse to materialize codes larger than this
EXPANSION_CAP = 1 << 22
ORACLE_MAX_N = 10


@dataclass(frozen=True)
class Code:
    """A set of distinct binary words sharing one length n."""

    n: int
    words: frozenset[BitWord]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_BITS:
            raise DomainError(f"word length {self.n} out of range 1..{MAX_BITS}")
        for w in self.words:
            if w.length != self.n:
                raise DomainError(
                    f"word {w} has length {w.length}, expected {self.n}"
                )

    @classmethod
    def from_values(cls, n: int, values: Iterable[int]) -> "Code":
        return cls(n, frozenset(BitWord(n, v) for v in values))

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "Code":
        ws = frozenset(BitWord(len(s), int(s, 2)) for s in strings)
        if not ws:
            raise DomainError("cannot infer length of an empty code")
        n = next(iter(ws)).length
        return cls(n, ws)

    def values(self) -> list[int]:
        return sorted(w.value for w in self.words)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(sorted(self.words))


@dataclass(frozen=True)
class OverlapWitness:
    """A pair falsifying overlap-freeness: prefix_t(u) == suffix_t(v)."""

    u: BitWord
    v: BitWord
    t: int

    def __str__(self):
        return f"prefix_{self.t}({self.u}) == suffix_{self.t}({self.v})"


def is_overlap_free(
    code: Code, t1: int, t2: int
) -> tuple[bool, Optional[OverlapWitness]]:
    """Check every ordered pair (u, v), u == v allowed, for t in [t1, t2].

    On failure the witness is the smallest violation under (t, u, v) order.
    """
    n = code.n
    if not 1 <= t1 <= t2 <= n - 1:
        raise DomainError(f"need 1 <= t1 <= t2 <= n-1, got t1={t1}, t2={t2}, n={n}")
    values = code.values()
    for t in range(t1, t2 + 1):
        mask = (1 << t) - 1
        shift = n - t
        best_v: dict[int, int] = {}
        for v in values:
            s = v & mask
            if s not in best_v:
                best_v[s] = v
        for u in values:
            hit = best_v.get(u >> shift)
            if hit is not None:
                return False, OverlapWitness(BitWord(n, u), BitWord(n, hit), t)
    return True, None


@dataclass(frozen=True)
class PrefixSuffixSystem:
    """A pair (P, S) of k-bit word sets driving the p || x || s construction."""

    k: int
    prefixes: frozenset[BitWord]
    suffixes: frozenset[BitWord]

    def __post_init__(self):
        if not 1 <= self.k <= MAX_BITS:
            raise DomainError(f"width {self.k} out of range 1..{MAX_BITS}")
        for w in self.prefixes | self.suffixes:
            if w.length != self.k:
                raise DomainError(f"word {w} has length {w.length}, expected {self.k}")

    @classmethod
    def from_values(cls, k: int, p: Iterable[int], s: Iterable[int]):
        return cls(
            k,
            frozenset(BitWord(k, v) for v in p),
            frozenset(BitWord(k, v) for v in s),
        )

    def prefix_values(self) -> list[int]:
        return sorted(w.value for w in self.prefixes)

    def suffix_values(self) -> list[int]:
        return sorted(w.value for w in self.suffixes)


def validate_system(
    sys: PrefixSuffixSystem,
) -> tuple[bool, Optional[tuple[int, BitWord]]]:
    """True iff no t-prefix of P equals a t-suffix of S for any t in [1, k].

    On failure, returns the smallest t and the smallest colliding t-word.
    """
    k = sys.k
    pv = sys.prefix_values()
    sv = sys.suffix_values()
    for t in range(1, k + 1):
        ptops = {p >> (k - t) for p in pv}
        stails = {s & ((1 << t) - 1) for s in sv}
        clash = ptops & stails
        if clash:
            return False, (t, BitWord(t, min(clash)))
    return True, None


def symbolic_size(sys: PrefixSuffixSystem):
    """|P| * |S| * 2^(n-2k) as a SymbolicSize."""
    from .counting import SymbolicSize

    return SymbolicSize(len(sys.prefixes) * len(sys.suffixes), 2 * sys.k)


def expand_system(sys: PrefixSuffixSystem, n: int) -> Code:
    """Materialize { p || x || s } for all middles x of length n - 2k."""
    k = sys.k
    if n < 2 * k:
        raise DomainError(f"need n >= 2k = {2 * k}, got n={n}")
    if n > MAX_BITS:
        raise CapacityError(
            f"explicit expansion needs n <= {MAX_BITS}; use symbolic_size instead"
        )
    mid = n - 2 * k
    total = len(sys.prefixes) * len(sys.suffixes) << mid
    if total > EXPANSION_CAP:
        raise CapacityError(
            f"expansion would create {total} words (cap {EXPANSION_CAP})"
        )
    out = []
    for p in sys.prefix_values():
        top = p << (n - k)
        for x in range(1 << mid):
            body = top | (x << k)
            for s in sys.suffix_values():
                out.append(body | s)
    return Code.from_values(n, out)


# ---------------------------------------------------------------------------
# file format: optional "# n=<int> q=2" header, one word per line


def write_code(code: Code, fh: TextIO):
    fh.write(f"# n={code.n} q=2\n")
    for v in code.values():
        fh.write(int_to_bits(v, code.n) + "\n")


def read_code(fh: TextIO) -> Code:
    n = None
    values = []
    for lineno, raw in enumerate(fh, 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if n is None and not values and body.startswith("n="):
                try:
                    n = int(body.split()[0][2:])
                except ValueError as exc:
                    raise DomainError(f"line {lineno}: bad header {line!r}") from exc
            continue
        if set(line) - {"0", "1"}:
            raise DomainError(f"line {lineno}: invalid word {line!r}")
        if n is None:
            n = len(line)
        elif len(line) != n:
            raise DomainError(
                f"line {lineno}: word length {len(line)} != {n}"
            )
        values.append(int(line, 2))
    if n is None:
        raise DomainError("no words and no header in code file")
    return Code.from_values(n, values)


# ---------------------------------------------------------------------------
# exact maximum-code oracle for small n


def _max_weight_independent_set(adj: list[int], weights: list[int]) -> tuple[int, int]:
    """Exact max-weight independent set; returns (weight, chosen bitmask).

    Branch and bound on bitmasks: branch on the highest-degree live vertex,
    bound by a greedy clique cover (each clique contributes its max weight).
    """
    m = len(adj)
    best_w = 0
    best_mask = 0

    def cover_bound(mask: int) -> int:
        bound = 0
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            top = weights[v]
            cand = rest & adj[v]
            clique = 1 << v
            while cand:
                u = (cand & -cand).bit_length() - 1
                if weights[u] > top:
                    top = weights[u]
                clique |= 1 << u
                cand &= adj[u]
            rest &= ~clique
            bound += top
        return bound

    def dfs(mask: int, acc: int, chosen: int):
        nonlocal best_w, best_mask
        if acc > best_w:
            best_w, best_mask = acc, chosen
        if not mask:
            return
        if acc + cover_bound(mask) <= best_w:
            return
        v, deg = -1, -1
        mm = mask
        while mm:
            u = (mm & -mm).bit_length() - 1
            d = (adj[u] & mask).bit_count()
            if d > deg:
                deg, v = d, u
            mm &= mm - 1
        if deg == 0:
            # remaining vertices are pairwise compatible: take them all
            total = acc
            mm = mask
            while mm:
                u = (mm & -mm).bit_length() - 1
                total += weights[u]
                mm &= mm - 1
            if total > best_w:
                best_w, best_mask = total, chosen | mask
            return
        dfs(mask & ~(adj[v] | (1 << v)), acc + weights[v], chosen | (1 << v))
        dfs(mask & ~(1 << v), acc, chosen)

    dfs((1 << m) - 1, 0, 0)
    return best_w, best_mask


def brute_force_max_code(
    n: int, t1: int, t2: int, canonical: bool = False
) -> tuple[int, Code]:
    """Exact largest code of length n free of overlaps sized t1..t2.

    Words sharing the (t2-prefix, t2-suffix) signature conflict identically,
    so the conflict graph is collapsed to one weighted vertex per signature
    before the exact independent-set search. Self-conflicting signatures are
    dropped up front: such words can never appear in any code. Every optimum
    is a union of whole signature classes, hence with canonical=True the
    greedy by smallest member word yields the lexicographically smallest
    optimal code.
    """
    if not 1 <= t1 <= t2 <= n - 1:
        raise DomainError(f"need 1 <= t1 <= t2 <= n-1, got t1={t1}, t2={t2}, n={n}")
    if n > ORACLE_MAX_N:
        raise CapacityError(f"oracle capped at n = {ORACLE_MAX_N}")

    trange = range(t1, t2 + 1)

    def conflict(u_sig, v_sig):
        # u_sig/v_sig are (prefix value, suffix value) of width t2
        return any(
            int_overlap(u_sig[0], v_sig[1], t2, t)
            or int_overlap(v_sig[0], u_sig[1], t2, t)
            for t in trange
        )

    classes: dict[tuple[int, int], list[int]] = {}
    for w in range(1 << n):
        sig = (w >> (n - t2), w & ((1 << t2) - 1))
        if any(int_overlap(sig[0], sig[1], t2, t) for t in trange):
            continue
        classes.setdefault(sig, []).append(w)

    sigs = sorted(classes)
    nc = len(sigs)
    adj = [0] * nc
    for i, si in enumerate(sigs):
        for j in range(i + 1, nc):
            if conflict(si, sigs[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i

    weights = [len(classes[s]) for s in sigs]
    size, chosen = _max_weight_independent_set(adj, weights)

    if canonical and nc:
        chosen = _lex_smallest_classes(adj, weights, sigs, classes, size)

    values = []
    for i, s in enumerate(sigs):
        if (chosen >> i) & 1:
            values.extend(classes[s])
    return size, Code.from_values(n, values)


def _lex_smallest_classes(adj, weights, sigs, classes, best_w):
    """Optimal class set whose sorted word union is lexicographically least.

    Classes are disjoint, every optimum uses whole classes, and all optima
    hold the same number of words, so deciding classes in order of their
    smallest member (keep one iff the optimum stays reachable) is exact.
    """
    nc = len(sigs)
    order = sorted(range(nc), key=lambda i: classes[sigs[i]][0])
    chosen_mask = 0
    chosen_w = 0
    avail = (1 << nc) - 1
    for i in order:
        if not (avail >> i) & 1:
            continue
        trial_avail = avail & ~(adj[i] | (1 << i))
        rest_w, _ = _max_weight_independent_set(
            [adj[j] & trial_avail for j in range(nc)],
            [w if (trial_avail >> j) & 1 else 0 for j, w in enumerate(weights)],
        )
        if chosen_w + weights[i] + rest_w >= best_w:
            chosen_mask |= 1 << i
            chosen_w += weights[i]
            avail = trial_avail
        else:
            avail &= ~(1 << i)
    if chosen_w != best_w:
        raise AssertionError("canonical refinement lost the optimum")
    return chosen_mask

"""Step-z Fibonacci numbers, run-constrained word counts, and code-size bounds.

All counts are exact Python integers; all bounds are exact Fractions.
Decimal output goes through render_decimal, which rounds half-up, so golden
values in published tables can be compared as strings.
"""

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import CapacityError, DomainError

PHI_ENUMERATION_CAP = 24
NU_BRUTE_CAP = 4


class FibTable:
    """Memoized z-step Fibonacci sequence.

    F(i) = 0 for -z+2 <= i <= 0, F(1) = 1, and each later term is the sum
    of the z preceding terms. Not safe for concurrent writers; use one
    table per thread (the CLI builds one per invocation).
    """

    def __init__(self, z: int):
        if z < 1:
            raise DomainError(f"step must be >= 1, got {z}")
        self.z = z
        # self._vals[j] = F(j - z + 2); seeded with the z values F(-z+2)..F(1)
        self._vals = [0] * (z - 1) + [1]
        self._window = 1  # sum of the last z stored values

    def value(self, i: int) -> int:
        if i < -self.z + 2:
            raise DomainError(f"index {i} below first defined term {-self.z + 2}")
        j = i + self.z - 2
        while j >= len(self._vals):
            nxt = self._window
            self._vals.append(nxt)
            self._window += nxt - self._vals[-1 - self.z]
        return self._vals[j]


_fib_tables: dict[int, FibTable] = {}
_fib_lock = threading.Lock()


def fib_nstep(z: int, i: int) -> int:
    """F_i of the z-step Fibonacci sequence, exact.

    The shared per-z tables are extended under a lock, so concurrent readers
    see each index computed exactly once.
    """
    with _fib_lock:
        table = _fib_tables.get(z)
        if table is None:
            table = _fib_tables[z] = FibTable(z)
        return table.value(i)


def count_no_zero_run(length: int, run: int) -> int:
    """Binary words of the given length with no run of `run` consecutive 0s.

    Equals fib_nstep(run, length + 2); brute-force checked in the tests for
    length <= 16.
    """
    if length < 1 or run < 1:
        raise DomainError("length and run must be >= 1")
    return fib_nstep(run, length + 2)


def count_no_zero_run_brute(length: int, run: int) -> int:
    if length > 20:
        raise CapacityError("brute-force count capped at length 20")
    forbidden = "0" * run
    return sum(
        1 for w in range(1 << length) if forbidden not in format(w, f"0{length}b")
    )


def _min_gap_histogram(length: int, weight: int) -> list[int]:
    """hist[g] = number of weight-`weight` words whose smallest cyclic gap
    between consecutive ones is exactly g; gap `length` stands for 'no pair'."""
    hist = [0] * (length + 1)
    if weight <= 1:
        hist[length] = 1 if weight == 0 else length
        return hist
    for pos in combinations(range(length), weight):
        g = length - pos[-1] + pos[0] - 1
        for a, b in zip(pos, pos[1:]):
            d = b - a - 1
            if d < g:
                g = d
        hist[g] += 1
    return hist


_gap_hist_cache: dict[tuple[int, int], list[int]] = {}


def count_cyclic_spaced_ones(length: int, weight: int, gap: int) -> int:
    """Fixed-weight binary words where cyclically consecutive ones are
    separated by at least `gap` zeros. Exact, by enumeration."""
    if not 1 <= gap < length:
        raise DomainError(f"gap must satisfy 1 <= gap < length, got {gap}")
    if not 0 <= weight < length:
        raise DomainError(f"weight must satisfy 0 <= weight < length, got {weight}")
    if length > PHI_ENUMERATION_CAP:
        raise CapacityError(f"enumeration capped at length {PHI_ENUMERATION_CAP}")
    key = (length, weight)
    hist = _gap_hist_cache.get(key)
    if hist is None:
        hist = _gap_hist_cache[key] = _min_gap_histogram(length, weight)
    return sum(hist[gap:])


def max_cyclic_zero_run(value: int, length: int) -> int:
    if value == 0:
        return length
    bits = format(value, f"0{length}b")
    lead = len(bits) - len(bits.lstrip("0"))
    trail = len(bits) - len(bits.rstrip("0"))
    inner = max(len(r) for r in bits.split("1"))
    return max(inner, lead + trail)


def count_cyclic_run_free(a: int) -> int:
    """Words of length 2**a with no cyclic run of a-1 or more zeros.

    Decomposes on the lengths of the leading and trailing zero blocks: a
    word with some 1 splits as 0^i 1 (interior) 1 0^j, the wrap run is i+j,
    and interior segments are counted by the step-(a-1) recurrence. The
    decomposition is validated against count_cyclic_run_free_brute for
    a <= 4 before being trusted beyond.
    """
    if a < 2:
        raise DomainError("need a >= 2 so the forbidden run length is >= 1")
    ell, z = 1 << a, a - 1
    return sum((d + 1) * fib_nstep(z, ell - d) for d in range(z))


def count_cyclic_run_free_brute(a: int) -> int:
    if a < 2:
        raise DomainError("need a >= 2")
    if a > NU_BRUTE_CAP:
        raise CapacityError(f"brute force capped at a = {NU_BRUTE_CAP}")
    ell, z = 1 << a, a - 1
    return sum(1 for w in range(1 << ell) if max_cyclic_zero_run(w, ell) < z)


# ---------------------------------------------------------------------------
# symbolic sizes: coefficient * 2^(n - offset) for a symbolic length n


@dataclass(frozen=True)
class SymbolicSize:
    """Exact code-family size coefficient * 2**(n - offset), n symbolic."""

    coefficient: int
    offset: int

    def __post_init__(self):
        if self.coefficient < 0:
            raise DomainError("coefficient must be non-negative")

    def _normalized(self) -> tuple[int, int]:
        if self.coefficient == 0:
            return (0, 0)
        shift = (self.coefficient & -self.coefficient).bit_length() - 1
        return (self.coefficient >> shift, self.offset - shift)

    def __eq__(self, other):
        if not isinstance(other, SymbolicSize):
            return NotImplemented
        return self._normalized() == other._normalized()

    def __hash__(self):
        return hash(self._normalized())

    def _cmp_key(self, other: "SymbolicSize") -> tuple[int, int]:
        # shift both onto the larger offset so the comparison is integral
        c = max(self.offset, other.offset)
        return (self.coefficient << (c - self.offset),
                other.coefficient << (c - other.offset))

    def __lt__(self, other):
        a, b = self._cmp_key(other)
        return a < b

    def __le__(self, other):
        a, b = self._cmp_key(other)
        return a <= b

    def value_at(self, n: int) -> int:
        if n < self.offset:
            raise DomainError(f"need n >= {self.offset} to evaluate, got {n}")
        return self.coefficient << (n - self.offset)

    def per_word_fraction(self) -> Fraction:
        """size / 2**n as an exact fraction."""
        return Fraction(self.coefficient, 1 << self.offset)

    def __str__(self):
        return f"{self.coefficient} x 2^(n-{self.offset})"


# ---------------------------------------------------------------------------
# closed-form bounds


def upper_bound_weak(n: int, k: int, q: int = 2) -> Fraction:
    """Ceiling q^n / (2n - 2k + 1) on codes forbidding overlaps of size >= k."""
    if not 1 <= k <= n - 1:
        raise DomainError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    if q < 2:
        raise DomainError("alphabet size must be >= 2")
    return Fraction(q**n, 2 * n - 2 * k + 1)


def upper_bound_1k(n: int, k: int, q: int = 2) -> Fraction:
    """Ceiling q^n / 2k on codes forbidding overlaps of size <= k (k <= n/2)."""
    if k < 1 or 2 * k > n:
        raise DomainError(f"need 1 <= k <= n/2, got k={k}, n={n}")
    if q < 2:
        raise DomainError("alphabet size must be >= 2")
    return Fraction(q**n, 2 * k)


def upper_bound_graph(n: int, k: int) -> int:
    """Binary ceiling 2^(n-4) + 2^(n-k-2) from the bipartite-graph argument."""
    if k < 2:
        raise DomainError("need k >= 2")
    if n < k + 2:
        raise DomainError(f"need n >= k+2, got n={n}")
    return (1 << (n - 4)) + (1 << (n - k - 2))


LOWER_BOUND_VARIANTS = ("gen1", "gen2", "gen3")


def lower_bound_explicit(k: int, variant: str) -> Fraction:
    """Guaranteed-achievable fraction of 2^n for the zero-block family.

    gen1: 1/(9.67k) for all k >= 2 (the 9.67 is exactly 967/100);
    gen2: 2/(9k) for all k >= 2; gen3: 1/(4k) for k a power of two.
    """
    if k < 2:
        raise DomainError("need k >= 2")
    if variant == "gen1":
        return Fraction(100, 967 * k)
    if variant == "gen2":
        return Fraction(2, 9 * k)
    if variant == "gen3":
        if k & (k - 1):
            raise DomainError("gen3 applies only to powers of two")
        return Fraction(1, 4 * k)
    raise DomainError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class ClassicBounds:
    """Lower bounds for fully non-overlapping binary codes of length n."""

    nine_n: Fraction            # 2^n / (9n), always
    eight_n: Fraction | None    # 2^n / (8n) when n is a power of two
    lev_numerator: int          # the asymptotic constant 1/(2e n), kept
    lev_denominator_factor: str  # symbolically as the pair (1, "2en")
    lev_decimal: float          # display-only evaluation of 2^n/(2en)


def classic_bounds(n: int) -> ClassicBounds:
    if n < 3:
        raise DomainError("need n >= 3")
    power_of_two = n & (n - 1) == 0
    return ClassicBounds(
        nine_n=Fraction(1 << n, 9 * n),
        eight_n=Fraction(1 << n, 8 * n) if power_of_two else None,
        lev_numerator=1,
        lev_denominator_factor="2en",
        lev_decimal=float((1 << n) / (2 * math.e * n)),
    )


def render_decimal(x: Fraction, places: int = 1) -> str:
    """Round half-up to `places` digits; integral results drop the point."""
    if places < 0:
        raise DomainError("places must be >= 0")
    sign = "-" if x < 0 else ""
    num, den = abs(x.numerator), x.denominator
    scaled, rem = divmod(num * 10**places, den)
    if 2 * rem >= den:
        scaled += 1
    digits = str(scaled).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    whole, frac = digits[:-places], digits[-places:]
    frac = frac.rstrip("0")
    return sign + whole + ("." + frac if frac else "")

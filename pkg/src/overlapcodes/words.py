"""Fixed-length binary words packed into machine integers.

A word of length n is stored as the integer whose binary expansion, padded
to n digits, reads the word left to right: bit index 1 is the leftmost and
most significant symbol. Length is capped at 64 so that every prefix,
suffix, and overlap test is a couple of shifts and masks on one machine
word. Everything here is a pure function on immutable values.
"""

from .errors import CapacityError, DomainError

MAX_BITS = 64


def _check_length(n: int):
    if n < 1:
        raise DomainError(f"word length must be >= 1, got {n}")
    if n > MAX_BITS:
        raise CapacityError(f"packed words are capped at {MAX_BITS} bits, got {n}")


# int-level primitives; value is assumed to fit in n bits
def int_prefix(value: int, n: int, t: int) -> int:
    return value >> (n - t)


def int_suffix(value: int, t: int) -> int:
    return value & ((1 << t) - 1)


def int_overlap(u: int, v: int, n: int, t: int) -> bool:
    """t-prefix of u equals t-suffix of v."""
    return (u >> (n - t)) == (v & ((1 << t) - 1))


def int_to_bits(value: int, n: int) -> str:
    return format(value, f"0{n}b")


class BitWord:
    """An immutable binary word of fixed length (1..64 bits)."""

    __slots__ = ("length", "value")

    def __init__(self, length: int, value: int):
        _check_length(length)
        if not 0 <= value < (1 << length):
            raise DomainError(f"value {value} does not fit in {length} bits")
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, val):
        raise AttributeError("BitWord is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, BitWord)
            and self.length == other.length
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.length, self.value))

    def __lt__(self, other):
        if not isinstance(other, BitWord) or other.length != self.length:
            return NotImplemented
        return self.value < other.value

    def __str__(self):
        return int_to_bits(self.value, self.length)

    def __repr__(self):
        return f"BitWord({str(self)!r})"

    def bit(self, i: int) -> int:
        """Symbol at position i, 1-based from the left."""
        if not 1 <= i <= self.length:
            raise DomainError(f"bit index {i} out of range 1..{self.length}")
        return (self.value >> (self.length - i)) & 1


def from_integer(value: int, k: int) -> BitWord:
    """The k-bit big-endian representation of value; 0 <= value < 2**k."""
    _check_length(k)
    if not 0 <= value < (1 << k):
        raise DomainError(f"value {value} out of range for {k} bits")
    return BitWord(k, value)


def parse(text: str) -> BitWord:
    """Inverse of str(): a run of '0'/'1' characters, leftmost first."""
    _check_length(len(text))
    if set(text) - {"0", "1"}:
        raise DomainError(f"word may contain only '0' and '1': {text!r}")
    return BitWord(len(text), int(text, 2))


def prefix(w: BitWord, t: int) -> BitWord:
    if not 1 <= t <= w.length:
        raise DomainError(f"prefix size {t} out of range 1..{w.length}")
    return BitWord(t, int_prefix(w.value, w.length, t))


def suffix(w: BitWord, t: int) -> BitWord:
    if not 1 <= t <= w.length:
        raise DomainError(f"suffix size {t} out of range 1..{w.length}")
    return BitWord(t, int_suffix(w.value, t))


def t_overlap(u: BitWord, v: BitWord, t: int) -> bool:
    """True iff the t-prefix of u equals the t-suffix of v (u may be v)."""
    if u.length != v.length:
        raise DomainError(f"length mismatch: {u.length} vs {v.length}")
    if not 1 <= t <= u.length:
        raise DomainError(f"overlap size {t} out of range 1..{u.length}")
    return int_overlap(u.value, v.value, u.length, t)


def cyclic_shift(w: BitWord, j: int) -> BitWord:
    """Rotate left by j: a1..an -> a(j+1)..an a1..aj."""
    if not 0 <= j < w.length:
        raise DomainError(f"shift {j} out of range 0..{w.length - 1}")
    n = w.length
    v = ((w.value << j) | (w.value >> (n - j))) & ((1 << n) - 1)
    return BitWord(n, v)

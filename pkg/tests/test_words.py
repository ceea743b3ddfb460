import pytest

from overlapcodes import (
    BitWord,
    CapacityError,
    DomainError,
    cyclic_shift,
    from_integer,
    parse,
    prefix,
    suffix,
    t_overlap,
)


def test_from_integer_examples():
    assert str(from_integer(3, 4)) == "0011"
    assert str(from_integer(0, 5)) == "00000"
    assert str(from_integer(11, 6)) == "001011"


def test_from_integer_range_errors():
    with pytest.raises(DomainError):
        from_integer(16, 4)
    with pytest.raises(DomainError):
        from_integer(-1, 4)
    with pytest.raises(CapacityError):
        from_integer(0, 65)
    with pytest.raises(DomainError):
        from_integer(0, 0)


def test_parse_round_trip():
    for text in ("0", "1", "001011", "1" * 64):
        assert str(parse(text)) == text
    with pytest.raises(DomainError):
        parse("01x1")
    with pytest.raises(DomainError):
        parse("")


def test_prefix_suffix_examples():
    w = parse("0111")
    assert str(prefix(w, 2)) == "01"
    assert str(suffix(w, 2)) == "11"
    assert prefix(w, 4) == w
    assert suffix(w, 4) == w
    with pytest.raises(DomainError):
        prefix(w, 0)
    with pytest.raises(DomainError):
        suffix(w, 5)


def test_t_overlap_examples():
    assert t_overlap(parse("0111"), parse("1101"), 2)
    assert t_overlap(parse("0000"), parse("0000"), 3)
    assert not t_overlap(parse("0011"), parse("0011"), 2)
    with pytest.raises(DomainError):
        t_overlap(parse("01"), parse("011"), 1)
    with pytest.raises(DomainError):
        t_overlap(parse("01"), parse("10"), 3)


def test_cyclic_shift_examples():
    assert str(cyclic_shift(parse("0011"), 1)) == "0110"
    assert cyclic_shift(parse("0011"), 0) == parse("0011")
    assert str(cyclic_shift(parse("1000"), 3)) == "0100"
    with pytest.raises(DomainError):
        cyclic_shift(parse("1000"), 4)


def test_equality_requires_matching_length():
    assert parse("001") != parse("0001")
    assert parse("001") == BitWord(3, 1)
    assert hash(parse("001")) == hash(BitWord(3, 1))


def test_extractors_agree_with_string_reference_exhaustive():
    # prefix/suffix/overlap reduce to string slicing on the rendered word;
    # checking the extractors on every word of length <= 10 pins the
    # pairwise overlap predicate too, since it compares fixed-width values
    for n in range(1, 11):
        for v in range(1 << n):
            w = BitWord(n, v)
            s = str(w)
            for t in range(1, n + 1):
                assert str(prefix(w, t)) == s[:t]
                assert str(suffix(w, t)) == s[-t:]


def test_t_overlap_matches_string_reference_small():
    for n in range(1, 6):
        for u in range(1 << n):
            for v in range(1 << n):
                su, sv = format(u, f"0{n}b"), format(v, f"0{n}b")
                for t in range(1, n + 1):
                    assert (
                        t_overlap(BitWord(n, u), BitWord(n, v), t)
                        == (su[:t] == sv[-t:])
                    )


def test_prefix_of_integer_is_shifted_integer():
    for k in range(1, 13):
        for m in range(1 << k):
            w = from_integer(m, k)
            for t in range(1, k + 1):
                assert prefix(w, t) == from_integer(m >> (k - t), t)


def test_cyclic_shift_composes():
    for n in range(1, 9):
        for v in range(0, 1 << n, 3 if n > 6 else 1):
            w = BitWord(n, v)
            for i in range(n):
                for j in range(n):
                    assert cyclic_shift(cyclic_shift(w, i), j) == cyclic_shift(
                        w, (i + j) % n
                    )


def test_bit_indexing_is_one_based_from_left():
    w = parse("0100")
    assert [w.bit(i) for i in (1, 2, 3, 4)] == [0, 1, 0, 0]
    with pytest.raises(DomainError):
        w.bit(0)

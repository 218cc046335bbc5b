import math
from fractions import Fraction

import pytest

from packdense import (
    CorruptTableError,
    CSeq,
    LayerProfile,
    OverflowGuardError,
    TableInvariantError,
    TableVersionError,
    build_table,
    c_sequence,
    count_qell_in_layered,
    extend_table,
    first_n_with_k,
    last_n_with_k,
    load_table,
    max_safe_nmax,
    optimal_layer_profile,
    save_table,
    truncate_table,
    validate_table,
)
from conftest import C30_EXPECTED, K2_EXPECTED, M2_EXPECTED, M3_EXPECTED


def test_table_matches_frozen_values(table2_30):
    assert [table2_30.m(n) for n in range(1, 31)] == M2_EXPECTED
    assert [table2_30.k(n) for n in range(3, 31)] == K2_EXPECTED
    assert table2_30.m(30) == 1968
    assert table2_30.k(30) == 11
    assert table2_30.m(17) - table2_30.m(16) == 60
    assert table2_30.m(4) == 3 and table2_30.k(4) == 1


def test_ell3_matches_composition_sweep(table3_60):
    assert [table3_60.m(n) for n in range(4, 15)] == M3_EXPECTED


@pytest.mark.parametrize("ell", [2, 3, 4, 5])
def test_base_values(ell):
    table = build_table(ell, ell + 1)
    assert table.m(ell) == 0
    assert table.m(ell + 1) == 1
    assert table.k(ell + 1) == 1


def test_build_validation():
    with pytest.raises(ValueError):
        build_table(1, 10)
    with pytest.raises(ValueError):
        build_table(2, 0)


def test_structural_invariants(table2_100, table3_60):
    for table in (table2_100, table3_60):
        ell = table.ell
        for n in range(1, table.nmax + 1):
            assert table.m(n) >= table.m(n - 1)
        for n in range(ell + 1, table.nmax + 1):
            k = table.k(n)
            assert n - ell <= k * (ell + 1) and k * ell < n
            assert table.m(n) == table.m(k) + k * math.comb(n - k, ell)
        for n in range(ell + 2, table.nmax + 1):
            assert table.k(n - 1) <= table.k(n) <= table.k(n - 1) + 1
        for n in range(0, table.nmax - 1):
            second = table.m(n + 2) - 2 * table.m(n + 1) + table.m(n)
            assert 0 <= second <= math.comb(n, ell - 1)
        for n in range(ell + 2, table.nmax + 1):
            assert table.density(n) <= table.density(n - 1)
        validate_table(table)


def test_c_sequence_values(table2_30):
    cseq = c_sequence(table2_30, 30)
    assert list(cseq.values) == C30_EXPECTED
    assert cseq.value(1) == 406
    assert cseq.value(11) == 1968
    assert cseq.value(12) == 1951
    assert max(cseq.values) == table2_30.m(30)
    assert cseq.values.index(max(cseq.values)) + 1 == table2_30.k(30) == 11
    assert cseq.k_turn == 11
    assert cseq.j_turn == 24


def test_c_sequence_small_and_errors(table2_30, table3_60):
    for table in (table2_30, table3_60):
        ell = table.ell
        cseq = c_sequence(table, ell + 1)
        assert cseq.values == (1,) + (0,) * (ell - 1)
        assert cseq.value(1) == 1 == max(cseq.values)
        with pytest.raises(ValueError):
            c_sequence(table, ell)
        with pytest.raises(ValueError):
            c_sequence(table, table.nmax + 1)
    with pytest.raises(ValueError):
        CSeq(2, 5, (1, 2, 3), 5, 5)  # k_turn out of range
    with pytest.raises(ValueError):
        CSeq(2, 5, (1, 2), 1, 1)  # wrong length


def test_first_last_n_with_k(table2_30, table3_60):
    assert first_n_with_k(table2_30, 1) == 3
    assert last_n_with_k(table2_30, 1) == 4
    assert first_n_with_k(table2_30, 2) == 5
    assert first_n_with_k(table2_30, 3) == 8
    assert first_n_with_k(table2_30, 99) is None
    # right-censored: k at the table edge has an unknown last n
    edge_k = table2_30.k(30)
    assert last_n_with_k(table2_30, edge_k) is None
    assert last_n_with_k(table2_30, edge_k + 5) is None
    with pytest.raises(ValueError):
        first_n_with_k(table2_30, 0)
    for table in (table2_30, table3_60):
        ell = table.ell
        assert first_n_with_k(table, 1) == ell + 1
        for k in range(2, ell + 2):
            assert first_n_with_k(table, k) == (ell + 1) * k - 1
        kmax = table.k(table.nmax)
        for k in range(1, kmax):
            count = last_n_with_k(table, k) - first_n_with_k(table, k) + 1
            assert count in (ell, ell + 1)
            assert last_n_with_k(table, k) <= (ell + 1) * k + ell - 1


def test_optimal_layer_profile(table2_30):
    assert optimal_layer_profile(table2_30, 1) == LayerProfile((1,))
    assert optimal_layer_profile(table2_30, 2) == LayerProfile((2,))
    assert optimal_layer_profile(table2_30, 4) == LayerProfile((1, 3))
    profile30 = optimal_layer_profile(table2_30, 30)
    assert profile30.layers[-1] == 19
    assert profile30.layers[:-1] == optimal_layer_profile(table2_30, 11).layers
    for n in range(1, 31):
        profile = optimal_layer_profile(table2_30, n)
        assert profile.n == n
        assert count_qell_in_layered(profile, 2) == table2_30.m(n)
    with pytest.raises(ValueError):
        optimal_layer_profile(table2_30, 0)


def test_overflow_guard():
    limit = max_safe_nmax(2)
    assert math.comb(limit, 3) <= 2**120 < math.comb(limit + 1, 3)
    with pytest.raises(OverflowGuardError) as exc:
        build_table(2, limit + 1)
    assert str(limit) in str(exc.value)


def test_save_load_round_trip(tmp_path, table2_100):
    path = tmp_path / "table.txt"
    save_table(table2_100, path)
    assert load_table(path) == table2_100
    # edge: a table too short to define any k_n has an empty K line
    tiny = build_table(2, 2)
    save_table(tiny, path)
    assert load_table(path) == tiny


def test_load_rejects_truncated_file(tmp_path, table2_30):
    path = tmp_path / "table.txt"
    save_table(table2_30, path)
    text = path.read_text()
    path.write_text(text[: text.rindex("K=")])
    with pytest.raises(CorruptTableError):
        load_table(path)


def test_load_rejects_unknown_version(tmp_path, table2_30):
    path = tmp_path / "table.txt"
    save_table(table2_30, path)
    path.write_text(path.read_text().replace("packdense-table-v1", "packdense-table-v9"))
    with pytest.raises(TableVersionError):
        load_table(path)


def test_load_rejects_tampered_values(tmp_path, table2_30):
    path = tmp_path / "table.txt"
    save_table(table2_30, path)
    original = path.read_text()
    path.write_text(original.replace(",1968", ",1969"))
    with pytest.raises(TableInvariantError):
        load_table(path)
    # k_30 = 11 -> 10 keeps the value but breaks the largest-maximizer rule
    save_table(table2_30, path)
    m_line, k_line = original.splitlines()[3], original.splitlines()[4]
    tampered_k = k_line[: k_line.rindex(",")] + ",10"
    path.write_text(original.replace(k_line, tampered_k))
    with pytest.raises(TableInvariantError):
        load_table(path)


def test_load_rejects_malformed_content(tmp_path, table2_30):
    path = tmp_path / "table.txt"
    path.write_text("format=packdense-table-v1\nell=2\n")
    with pytest.raises(CorruptTableError):
        load_table(path)
    save_table(table2_30, path)
    path.write_text(path.read_text().replace("ell=2", "ell=two"))
    with pytest.raises(CorruptTableError):
        load_table(path)
    save_table(table2_30, path)
    path.write_text(path.read_text() + "ell=3\n")
    with pytest.raises(CorruptTableError):
        load_table(path)


def test_extend_and_truncate(table2_30):
    small = build_table(2, 20)
    assert extend_table(small, 30) == table2_30
    assert truncate_table(table2_30, 20) == small
    assert extend_table(table2_30, 20) == small
    assert truncate_table(table2_30, 30) is table2_30
    with pytest.raises(ValueError):
        truncate_table(table2_30, 0)


def test_density_values(table2_30):
    assert table2_30.density(30) == Fraction(1968, math.comb(30, 3))
    assert table2_30.density(3) == Fraction(1)
    with pytest.raises(ValueError):
        table2_30.density(2)

import pytest

from packdense import build_table


@pytest.fixture(scope="session")
def table2_30():
    return build_table(2, 30)


@pytest.fixture(scope="session")
def table2_100():
    return build_table(2, 100)


@pytest.fixture(scope="session")
def table3_60():
    return build_table(3, 60)


# M_n for ell=2, n = 1..30.  Verified three ways: the recurrence, the pure
# composition sweep (n <= 16), and exhaustive search over S_n (n <= 9);
# M_30 = 1968 and M_17 - M_16 = 60 are documented anchor values.
M2_EXPECTED = [
    0, 0, 1, 3, 6, 12, 20, 31, 46, 64, 87, 115, 147, 186, 231, 282,
    342, 408, 482, 566, 657, 759, 871, 991, 1126, 1270, 1424, 1594, 1774, 1968,
]

# k_n for ell=2, n = 3..30
K2_EXPECTED = [
    1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 6, 6, 6, 7, 7, 7, 8, 8, 9, 9, 9,
    10, 10, 10, 11,
]

# c_{30,i} for ell=2, i = 1..29, reconstructed from the M values above
C30_EXPECTED = [
    406, 756, 1054, 1303, 1506, 1668, 1791, 1879, 1936, 1964, 1968, 1951,
    1915, 1866, 1806, 1738, 1668, 1596, 1527, 1466, 1413, 1375, 1354, 1351,
    1376, 1426, 1505, 1622, 1774,
]

# M_n for ell=3, n = 4..14 (composition sweep)
M3_EXPECTED = [1, 4, 10, 20, 40, 70, 112, 168, 252, 360, 495]

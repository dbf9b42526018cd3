"""Named matrices and published class lists used across the test suite."""

from quadra import BinMatrix


def all_ones(n):
    return BinMatrix.from_rows([[1] * n] * n)


def identity(n):
    return BinMatrix.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])


# Degree-4 pattern realized by the block composition of I_2 and the 2x2 Fourier unitary.
BLOCK_4 = BinMatrix.from_strings(["1011", "0111", "1011", "0111"])

# Degree-6 regular SQ matrix carrying the first forbidden block structure.
BLOCKED_6 = BinMatrix.from_strings(
    ["101110", "011101", "111100", "110011", "110011", "001111"]
)

# The two symmetric degree-5 SQ matrices carrying the second forbidden structure.
BLOCKED_5A = BinMatrix.from_strings(["10111", "01111", "11110", "11001", "11001"])
BLOCKED_5B = BinMatrix.from_strings(["10111", "01111", "11111", "11001", "11001"])

# Degree-10 SQ matrix carrying both forbidden structures.
BLOCKED_10 = BinMatrix.from_strings(
    [
        "1011110000",
        "0111001100",
        "1111000011",
        "0010111111",
        "0001111111",
        "1100111111",
        "1100111111",
        "1100111111",
        "1100111111",
        "1100111111",
    ]
)

# Published list of indecomposable SQ classes of degree 4:
# (rows, aut order, symmetric-equivalent, transpose-inequivalent, regular).
DEGREE4_CLASSES = [
    (("0111", "1111", "1111", "1111"), 36, True, False, False),
    (("0111", "1011", "1111", "1111"), 8, True, False, False),
    (("0111", "1011", "1101", "1111"), 6, True, False, False),
    (("0111", "1011", "1101", "1110"), 24, True, False, True),
    (("0011", "0111", "1111", "1111"), 4, True, False, False),
    (("0011", "1111", "1111", "1111"), 24, False, True, False),
    (("1011", "0111", "1011", "0111"), 16, False, True, False),
    (("1111", "1111", "1111", "1111"), 576, True, False, True),
]

# The two degree-5 indecomposable classes certified not to support unitaries.
DEGREE5_N_CLASSES = [
    (("00111", "00111", "11011", "11101", "11111"), 8),
    (("00111", "00111", "11011", "11101", "11110"), 24),
]

# Published regular degree-6 classes with line sum 4: (rows, aut, no-unitary flag).
DEGREE6_SIGMA4_CLASSES = [
    (("100111", "010111", "001111", "111100", "111010", "111001"), 72, False),
    (("001111", "001111", "110011", "110011", "111100", "111100"), 384, False),
    (("111100", "011110", "001111", "100111", "110011", "111001"), 12, False),
    (("001111", "001111", "111100", "110110", "110011", "111001"), 32, True),
]

# The two inequivalent degree-4 classes with exactly four zeros.
FOUR_ZERO_PAIR = (
    BinMatrix.from_strings(["0111", "1011", "1101", "1110"]),
    BinMatrix.from_strings(["1011", "0111", "1011", "0111"]),
)

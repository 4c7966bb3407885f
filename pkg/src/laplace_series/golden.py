"""Published values used by ``reproduce-paper`` and the golden tests."""

from fractions import Fraction

BERNOULLI = {
    0: Fraction(1),
    1: Fraction(-1, 2),
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
    16: Fraction(-3617, 510),
    18: Fraction(43867, 798),
    20: Fraction(-174611, 330),
}

EULER = {
    0: Fraction(1),
    1: Fraction(-1, 2),
    3: Fraction(1, 4),
    5: Fraction(-1, 2),
    7: Fraction(17, 8),
    9: Fraction(-31, 2),
    11: Fraction(691, 4),
    13: Fraction(-5461, 2),
    15: Fraction(929569, 16),
    17: Fraction(-3202291, 2),
    19: Fraction(221930581, 4),
}

# E[Y^m] for the even orders 2..20
MOMENTS = {
    2: Fraction(1, 12),
    4: Fraction(7, 240),
    6: Fraction(31, 1344),
    8: Fraction(127, 3840),
    10: Fraction(2555, 33792),
    12: Fraction(1414477, 5591040),
    14: Fraction(57337, 49152),
    16: Fraction(118518239, 16711680),
    18: Fraction(5749691557, 104595456),
    20: Fraction(91546277357, 173015040),
}

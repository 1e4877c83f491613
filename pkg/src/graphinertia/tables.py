"""Reference lists for the B* census.

Each entry is written in the usual notation, ``B<k>(halves; ...)``.  ``TABLE1`` covers
the k values listed inline; ``APPENDIX`` holds the per-k tables for
6 <= k <= 10 keyed by k, each entry paired with its stated order.
"""

TABLE1_COUNTS = {4: 18, 5: 47, 6: 138, 7: 161, 8: 205, 9: 124, 10: 78, 11: 24, 12: 6, 13: 1}

APPENDIX_ORDER_HISTOGRAM = {10: 4, 11: 32, 12: 150, 13: 520}

TABLE1 = {
    4: [
        "B4(3,2;3,2)",
        "B4(4,3;2,2)",
        "B4(4,3;3,1)",
        "B4(5,4;2,1)",
        "B4(5,2;2,3)",
        "B4(3,4;2,3)",
        "B4(4,1;3,4)",
        "B4(5,2;4,1)",
        "B4(7,3;2,1)",
        "B4(4,6;2,1)",
        "B4(7,2;2,2)",
        "B4(3,6;2,2)",
        "B4(4,2;2,5)",
        "B4(3,3;2,5)",
        "B4(7,2;3,1)",
        "B4(3,6;3,1)",
        "B4(6,1;3,3)",
        "B4(6,1;4,2)",
    ],
    5: [
        "B5(2,2;2,2;1)",
        "B5(2,3;1,2;2)",
        "B5(3,3;2,1;1)",
        "B5(3,4;1,1;2)",
        "B5(3,4;1,2;1)",
        "B5(1,3;1,3;3)",
        "B5(2,2;1,3;3)",
        "B5(2,4;2,1;2)",
        "B5(4,2;3,1;1)",
        "B5(4,5;1,1;1)",
        "B5(2,5;1,1;3)",
        "B5(4,3;1,1;3)",
        "B5(1,4;1,2;4)",
        "B5(3,2;1,2;4)",
        "B5(2,5;1,3;1)",
        "B5(4,3;1,3;1)",
        "B5(1,4;1,4;2)",
        "B5(3,2;1,4;2)",
        "B5(5,2;2,1;2)",
        "B5(3,1;2,3;3)",
        "B5(3,1;2,5;1)",
        "B5(4,1;3,2;2)",
        "B5(3,7;1,1;1)",
        "B5(6,4;1,1;1)",
        "B5(2,7;1,1;2)",
        "B5(6,3;1,1;2)",
        "B5(2,4;1,1;5)",
        "B5(3,3;1,1;5)",
        "B5(2,7;1,2;1)",
        "B5(6,3;1,2;1)",
        "B5(1,6;1,2;3)",
        "B5(5,2;1,2;3)",
        "B5(1,3;1,2;6)",
        "B5(2,2;1,2;6)",
        "B5(1,6;1,3;2)",
        "B5(5,2;1,3;2)",
        "B5(2,4;1,5;1)",
        "B5(3,3;1,5;1)",
        "B5(2,2;1,6;2)",
        "B5(2,7;2,1;1)",
        "B5(7,2;2,1;1)",
        "B5(4,2;2,1;4)",
        "B5(2,3;2,1;5)",
        "B5(5,1;2,3;2)",
        "B5(5,1;2,4;1)",
        "B5(3,2;3,1;4)",
        "B5(6,1;3,2;1)",
    ],
    11: [
        "B11(1,1,1,2,1;1,1,1,1,1;1)",
        "B11(2,1,1,1,1;1,1,1,1,1;1)",
        "B11(1,1,1,1,3;1,1,1,1,1;1)",
        "B11(1,1,1,2,2;1,1,1,1,1;1)",
        "B11(1,1,2,1,2;1,1,1,1,1;1)",
        "B11(1,1,2,2,1;1,1,1,1,1;1)",
        "B11(1,1,3,1,1;1,1,1,1,1;1)",
        "B11(1,2,1,1,2;1,1,1,1,1;1)",
        "B11(1,2,2,1,1;1,1,1,1,1;1)",
        "B11(1,3,1,1,1;1,1,1,1,1;1)",
        "B11(2,1,1,1,2;1,1,1,1,1;1)",
        "B11(2,2,1,1,1;1,1,1,1,1;1)",
        "B11(1,1,1,1,2;1,1,1,1,1;2)",
        "B11(1,1,2,1,1;1,1,1,1,1;2)",
        "B11(1,2,1,1,1;1,1,1,1,1;2)",
        "B11(1,1,1,1,1;1,1,1,1,1;3)",
        "B11(1,1,1,1,2;1,1,1,1,2;1)",
        "B11(1,1,1,2,1;1,1,1,1,2;1)",
        "B11(1,1,2,1,1;1,1,1,1,2;1)",
        "B11(1,2,1,1,1;1,1,1,1,2;1)",
        "B11(1,1,2,1,1;1,1,2,1,1;1)",
        "B11(1,2,1,1,1;1,1,2,1,1;1)",
        "B11(2,1,1,1,1;1,1,2,1,1;1)",
        "B11(1,2,1,1,1;1,2,1,1,1;1)",
    ],
    12: [
        "B12(1,1,1,1,1,2;1,1,1,1,1,1)",
        "B12(1,1,1,1,2,1;1,1,1,1,1,1)",
        "B12(1,1,1,2,1,1;1,1,1,1,1,1)",
        "B12(1,1,2,1,1,1;1,1,1,1,1,1)",
        "B12(1,2,1,1,1,1;1,1,1,1,1,1)",
        "B12(2,1,1,1,1,1;1,1,1,1,1,1)",
    ],
    13: [
        "B13(1,1,1,1,1,1;1,1,1,1,1,1;1)",
    ],
}

APPENDIX = {
    6: [
        (10, "B6(1,2,2;1,2,2)"),
        (10, "B6(2,2,1;1,2,2)"),
        (11, "B6(1,3,3;1,1,2)"),
        (11, "B6(2,3,2;1,1,2)"),
        (11, "B6(3,3,1;1,1,2)"),
        (11, "B6(1,3,3;1,2,1)"),
        (11, "B6(2,3,2;1,2,1)"),
        (11, "B6(3,3,1;1,2,1)"),
        (11, "B6(2,1,1;1,3,3)"),
        (11, "B6(3,2,1;2,1,2)"),
        (11, "B6(2,2,2;2,2,1)"),
        (11, "B6(3,1,2;3,1,1)"),
        (12, "B6(1,4,4;1,1,1)"),
        (12, "B6(2,4,3;1,1,1)"),
        (12, "B6(3,4,2;1,1,1)"),
        (12, "B6(4,4,1;1,1,1)"),
        (12, "B6(1,2,4;1,1,3)"),
        (12, "B6(1,4,2;1,1,3)"),
        (12, "B6(2,2,3;1,1,3)"),
        (12, "B6(2,4,1;1,1,3)"),
        (12, "B6(3,2,2;1,1,3)"),
        (12, "B6(4,2,1;1,1,3)"),
        (12, "B6(1,3,1;1,2,4)"),
        (12, "B6(2,1,2;1,2,4)"),
        (12, "B6(3,1,1;1,2,4)"),
        (12, "B6(1,4,2;1,3,1)"),
        (12, "B6(2,2,3;1,3,1)"),
        (12, "B6(2,4,1;1,3,1)"),
        (12, "B6(3,2,2;1,3,1)"),
        (12, "B6(4,2,1;1,3,1)"),
        (12, "B6(2,1,2;1,4,2)"),
        (12, "B6(3,1,1;1,4,2)"),
        (12, "B6(2,3,3;2,1,1)"),
        (12, "B6(4,1,3;2,1,1)"),
        (12, "B6(4,3,1;2,1,1)"),
        (12, "B6(2,3,2;2,1,2)"),
        (12, "B6(3,2,2;2,1,2)"),
        (12, "B6(4,1,2;2,1,2)"),
        (12, "B6(2,3,1;2,1,3)"),
        (12, "B6(4,1,1;2,1,3)"),
        (12, "B6(3,1,3;2,2,1)"),
        (12, "B6(3,2,2;2,2,1)"),
        (12, "B6(3,3,1;2,2,1)"),
        (12, "B6(3,1,1;2,2,3)"),
        (12, "B6(2,3,1;2,3,1)"),
        (12, "B6(3,2,2;3,1,1)"),
        (12, "B6(4,2,1;3,1,1)"),
        (12, "B6(4,1,1;4,1,1)"),
        (13, "B6(1,3,6;1,1,1)"),
        (13, "B6(1,6,3;1,1,1)"),
        (13, "B6(2,3,5;1,1,1)"),
        (13, "B6(2,6,2;1,1,1)"),
        (13, "B6(3,3,4;1,1,1)"),
        (13, "B6(3,6,1;1,1,1)"),
        (13, "B6(4,3,3;1,1,1)"),
        (13, "B6(5,3,2;1,1,1)"),
        (13, "B6(6,3,1;1,1,1)"),
        (13, "B6(1,2,6;1,1,2)"),
        (13, "B6(1,6,2;1,1,2)"),
        (13, "B6(2,2,5;1,1,2)"),
        (13, "B6(2,6,1;1,1,2)"),
        (13, "B6(3,2,4;1,1,2)"),
        (13, "B6(4,2,3;1,1,2)"),
        (13, "B6(5,2,2;1,1,2)"),
        (13, "B6(6,2,1;1,1,2)"),
        (13, "B6(1,2,3;1,1,5)"),
        (13, "B6(1,3,2;1,1,5)"),
        (13, "B6(2,2,2;1,1,5)"),
        (13, "B6(2,3,1;1,1,5)"),
        (13, "B6(3,2,1;1,1,5)"),
        (13, "B6(1,2,6;1,2,1)"),
        (13, "B6(1,6,2;1,2,1)"),
        (13, "B6(2,2,5;1,2,1)"),
        (13, "B6(2,6,1;1,2,1)"),
        (13, "B6(3,2,4;1,2,1)"),
        (13, "B6(4,2,3;1,2,1)"),
        (13, "B6(5,2,2;1,2,1)"),
        (13, "B6(6,2,1;1,2,1)"),
        (13, "B6(1,5,1;1,2,3)"),
        (13, "B6(2,1,4;1,2,3)"),
        (13, "B6(3,1,3;1,2,3)"),
        (13, "B6(4,1,2;1,2,3)"),
        (13, "B6(5,1,1;1,2,3)"),
        (13, "B6(2,1,1;1,2,6)"),
        (13, "B6(1,5,1;1,3,2)"),
        (13, "B6(2,1,4;1,3,2)"),
        (13, "B6(3,1,3;1,3,2)"),
        (13, "B6(4,1,2;1,3,2)"),
        (13, "B6(5,1,1;1,3,2)"),
        (13, "B6(2,2,2;1,5,1)"),
        (13, "B6(2,3,1;1,5,1)"),
        (13, "B6(3,2,1;1,5,1)"),
        (13, "B6(2,1,1;1,6,2)"),
        (13, "B6(2,2,5;2,1,1)"),
        (13, "B6(2,5,2;2,1,1)"),
        (13, "B6(3,1,5;2,1,1)"),
        (13, "B6(3,2,4;2,1,1)"),
        (13, "B6(3,3,3;2,1,1)"),
        (13, "B6(3,4,2;2,1,1)"),
        (13, "B6(3,5,1;2,1,1)"),
        (13, "B6(4,2,3;2,1,1)"),
        (13, "B6(4,3,2;2,1,1)"),
        (13, "B6(5,2,2;2,1,1)"),
        (13, "B6(6,1,2;2,1,1)"),
        (13, "B6(6,2,1;2,1,1)"),
        (13, "B6(2,2,4;2,1,2)"),
        (13, "B6(2,5,1;2,1,2)"),
        (13, "B6(3,1,4;2,1,2)"),
        (13, "B6(3,2,3;2,1,2)"),
        (13, "B6(6,1,1;2,1,2)"),
        (13, "B6(2,2,3;2,1,3)"),
        (13, "B6(3,1,3;2,1,3)"),
        (13, "B6(2,2,2;2,1,4)"),
        (13, "B6(3,1,2;2,1,4)"),
        (13, "B6(2,2,1;2,1,5)"),
        (13, "B6(3,1,1;2,1,5)"),
        (13, "B6(2,5,1;2,2,1)"),
        (13, "B6(4,2,2;2,2,1)"),
        (13, "B6(5,1,2;2,2,1)"),
        (13, "B6(5,2,1;2,2,1)"),
        (13, "B6(3,1,3;2,2,2)"),
        (13, "B6(4,1,2;2,2,2)"),
        (13, "B6(5,1,1;2,2,2)"),
        (13, "B6(3,1,2;2,2,3)"),
        (13, "B6(4,1,2;2,3,1)"),
        (13, "B6(4,2,1;2,3,1)"),
        (13, "B6(3,1,2;2,3,2)"),
        (13, "B6(4,1,1;2,3,2)"),
        (13, "B6(3,1,2;2,4,1)"),
        (13, "B6(3,2,1;2,4,1)"),
        (13, "B6(3,1,1;2,4,2)"),
        (13, "B6(3,3,2;3,1,1)"),
        (13, "B6(3,4,1;3,1,1)"),
        (13, "B6(6,1,1;3,1,1)"),
        (13, "B6(3,3,1;3,2,1)"),
        (13, "B6(4,2,1;3,2,1)"),
        (13, "B6(5,1,1;3,2,1)"),
        (13, "B6(4,1,1;3,3,1)"),
    ],
    7: [
        (10, "B7(2,2,1;1,1,2;1)"),
        (10, "B7(2,1,2;2,1,1;1)"),
        (11, "B7(3,3,1;1,1,1;1)"),
        (11, "B7(2,1,3;1,1,1;2)"),
        (11, "B7(2,2,2;1,1,2;1)"),
        (11, "B7(2,1,2;1,1,2;2)"),
        (11, "B7(1,2,1;1,1,3;2)"),
        (11, "B7(2,1,1;1,1,3;2)"),
        (11, "B7(1,2,3;1,2,1;1)"),
        (11, "B7(1,2,2;1,2,2;1)"),
        (11, "B7(2,1,1;1,2,3;1)"),
        (11, "B7(2,2,2;2,1,1;1)"),
        (11, "B7(3,2,1;2,1,1;1)"),
        (11, "B7(3,1,1;3,1,1;1)"),
        (12, "B7(1,3,4;1,1,1;1)"),
        (12, "B7(3,1,4;1,1,1;1)"),
        (12, "B7(3,3,2;1,1,1;1)"),
        (12, "B7(1,2,4;1,1,1;2)"),
        (12, "B7(2,2,3;1,1,1;2)"),
        (12, "B7(2,4,1;1,1,1;2)"),
        (12, "B7(3,2,2;1,1,1;2)"),
        (12, "B7(4,2,1;1,1,1;2)"),
        (12, "B7(1,1,4;1,1,1;3)"),
        (12, "B7(3,1,2;1,1,1;3)"),
        (12, "B7(1,3,3;1,1,2;1)"),
        (12, "B7(2,2,3;1,1,2;1)"),
        (12, "B7(3,1,3;1,1,2;1)"),
        (12, "B7(1,1,3;1,1,2;3)"),
        (12, "B7(1,3,1;1,1,2;3)"),
        (12, "B7(3,1,1;1,1,2;3)"),
        (12, "B7(1,3,2;1,1,3;1)"),
        (12, "B7(3,1,2;1,1,3;1)"),
        (12, "B7(1,2,2;1,1,3;2)"),
        (12, "B7(1,3,1;1,1,4;1)"),
        (12, "B7(3,1,1;1,1,4;1)"),
        (12, "B7(2,1,4;1,2,1;1)"),
        (12, "B7(2,2,3;1,2,1;1)"),
        (12, "B7(2,3,2;1,2,1;1)"),
        (12, "B7(2,4,1;1,2,1;1)"),
        (12, "B7(4,2,1;1,2,1;1)"),
        (12, "B7(2,1,2;1,2,1;3)"),
        (12, "B7(1,2,2;1,2,2;2)"),
        (12, "B7(1,3,1;1,2,2;2)"),
        (12, "B7(2,1,2;1,2,2;2)"),
        (12, "B7(3,1,1;1,2,2;2)"),
        (12, "B7(2,1,2;1,2,3;1)"),
        (12, "B7(1,3,2;1,3,1;1)"),
        (12, "B7(3,1,1;1,3,2;1)"),
        (12, "B7(2,3,2;2,1,1;1)"),
        (12, "B7(2,3,1;2,1,1;2)"),
        (12, "B7(4,1,1;2,1,1;2)"),
        (12, "B7(3,2,1;2,2,1;1)"),
        (12, "B7(3,1,1;2,2,1;2)"),
        (13, "B7(1,2,6;1,1,1;1)"),
        (13, "B7(1,5,3;1,1,1;1)"),
        (13, "B7(2,1,6;1,1,1;1)"),
        (13, "B7(2,2,5;1,1,1;1)"),
        (13, "B7(2,3,4;1,1,1;1)"),
        (13, "B7(2,4,3;1,1,1;1)"),
        (13, "B7(2,5,2;1,1,1;1)"),
        (13, "B7(2,6,1;1,1,1;1)"),
        (13, "B7(3,2,4;1,1,1;1)"),
        (13, "B7(3,3,3;1,1,1;1)"),
        (13, "B7(4,2,3;1,1,1;1)"),
        (13, "B7(5,1,3;1,1,1;1)"),
        (13, "B7(5,2,2;1,1,1;1)"),
        (13, "B7(6,2,1;1,1,1;1)"),
        (13, "B7(1,1,6;1,1,1;2)"),
        (13, "B7(1,4,3;1,1,1;2)"),
        (13, "B7(2,3,3;1,1,1;2)"),
        (13, "B7(2,4,2;1,1,1;2)"),
        (13, "B7(5,1,2;1,1,1;2)"),
        (13, "B7(1,3,3;1,1,1;3)"),
        (13, "B7(2,3,2;1,1,1;3)"),
        (13, "B7(1,2,3;1,1,1;4)"),
        (13, "B7(2,2,2;1,1,1;4)"),
        (13, "B7(2,3,1;1,1,1;4)"),
        (13, "B7(3,2,1;1,1,1;4)"),
        (13, "B7(1,1,3;1,1,1;5)"),
        (13, "B7(2,1,2;1,1,1;5)"),
        (13, "B7(1,2,5;1,1,2;1)"),
        (13, "B7(1,5,2;1,1,2;1)"),
        (13, "B7(2,1,5;1,1,2;1)"),
        (13, "B7(2,2,4;1,1,2;1)"),
        (13, "B7(5,1,2;1,1,2;1)"),
        (13, "B7(1,1,5;1,1,2;2)"),
        (13, "B7(1,2,4;1,1,2;2)"),
        (13, "B7(1,3,3;1,1,2;2)"),
        (13, "B7(1,4,2;1,1,2;2)"),
        (13, "B7(1,5,1;1,1,2;2)"),
        (13, "B7(5,1,1;1,1,2;2)"),
        (13, "B7(1,2,3;1,1,2;3)"),
        (13, "B7(1,3,2;1,1,2;3)"),
        (13, "B7(1,2,2;1,1,2;4)"),
        (13, "B7(1,1,2;1,1,2;5)"),
        (13, "B7(1,2,1;1,1,2;5)"),
        (13, "B7(2,1,1;1,1,2;5)"),
        (13, "B7(1,2,4;1,1,3;1)"),
        (13, "B7(1,5,1;1,1,3;1)"),
        (13, "B7(2,1,4;1,1,3;1)"),
        (13, "B7(5,1,1;1,1,3;1)"),
        (13, "B7(1,1,4;1,1,3;2)"),
        (13, "B7(1,2,3;1,1,3;2)"),
        (13, "B7(1,2,3;1,1,4;1)"),
        (13, "B7(2,1,3;1,1,4;1)"),
        (13, "B7(1,2,2;1,1,5;1)"),
        (13, "B7(2,1,2;1,1,5;1)"),
        (13, "B7(1,2,1;1,1,6;1)"),
        (13, "B7(2,1,1;1,1,6;1)"),
        (13, "B7(1,5,2;1,2,1;1)"),
        (13, "B7(3,2,3;1,2,1;1)"),
        (13, "B7(4,1,3;1,2,1;1)"),
        (13, "B7(4,2,2;1,2,1;1)"),
        (13, "B7(1,4,2;1,2,1;2)"),
        (13, "B7(2,3,2;1,2,1;2)"),
        (13, "B7(3,2,2;1,2,1;2)"),
        (13, "B7(4,1,2;1,2,1;2)"),
        (13, "B7(1,3,2;1,2,1;3)"),
        (13, "B7(2,2,2;1,2,1;3)"),
        (13, "B7(2,3,1;1,2,1;3)"),
        (13, "B7(3,2,1;1,2,1;3)"),
        (13, "B7(1,2,2;1,2,1;4)"),
        (13, "B7(1,5,1;1,2,2;1)"),
        (13, "B7(2,1,4;1,2,2;1)"),
        (13, "B7(3,1,3;1,2,2;1)"),
        (13, "B7(4,1,2;1,2,2;1)"),
        (13, "B7(5,1,1;1,2,2;1)"),
        (13, "B7(1,2,2;1,2,2;3)"),
        (13, "B7(2,1,1;1,2,2;4)"),
        (13, "B7(2,1,3;1,2,3;1)"),
        (13, "B7(3,1,3;1,3,1;1)"),
        (13, "B7(3,2,2;1,3,1;1)"),
        (13, "B7(2,2,2;1,3,1;2)"),
        (13, "B7(2,3,1;1,3,1;2)"),
        (13, "B7(3,1,2;1,3,1;2)"),
        (13, "B7(3,2,1;1,3,1;2)"),
        (13, "B7(2,1,3;1,3,2;1)"),
        (13, "B7(3,1,2;1,3,2;1)"),
        (13, "B7(2,1,2;1,3,2;2)"),
        (13, "B7(2,1,1;1,3,2;3)"),
        (13, "B7(2,1,3;1,4,1;1)"),
        (13, "B7(2,2,2;1,4,1;1)"),
        (13, "B7(2,3,1;1,4,1;1)"),
        (13, "B7(3,2,1;1,4,1;1)"),
        (13, "B7(2,1,2;1,4,1;2)"),
        (13, "B7(2,1,2;1,4,2;1)"),
        (13, "B7(2,1,1;1,4,2;2)"),
        (13, "B7(2,1,1;1,5,2;1)"),
        (13, "B7(2,4,2;2,1,1;1)"),
        (13, "B7(2,5,1;2,1,1;1)"),
        (13, "B7(6,1,1;2,1,1;1)"),
        (13, "B7(2,2,1;2,1,1;4)"),
        (13, "B7(3,1,1;2,1,1;4)"),
        (13, "B7(2,4,1;2,2,1;1)"),
        (13, "B7(5,1,1;2,2,1;1)"),
        (13, "B7(2,3,1;2,2,1;2)"),
        (13, "B7(2,2,1;2,2,1;3)"),
        (13, "B7(2,3,1;2,3,1;1)"),
        (13, "B7(3,2,1;2,3,1;1)"),
        (13, "B7(4,1,1;2,3,1;1)"),
        (13, "B7(3,1,1;2,4,1;1)"),
    ],
    8: [
        (11, "B8(1,2,1,2;1,1,1,2)"),
        (11, "B8(2,2,1,1;1,1,1,2)"),
        (11, "B8(1,2,2,1;1,1,2,1)"),
        (11, "B8(1,2,1,1;1,1,2,2)"),
        (11, "B8(2,1,2,1;1,2,1,1)"),
        (11, "B8(2,1,1,1;1,2,1,2)"),
        (12, "B8(1,1,3,3;1,1,1,1)"),
        (12, "B8(1,3,1,3;1,1,1,1)"),
        (12, "B8(1,3,3,1;1,1,1,1)"),
        (12, "B8(2,1,3,2;1,1,1,1)"),
        (12, "B8(2,3,1,2;1,1,1,1)"),
        (12, "B8(3,1,3,1;1,1,1,1)"),
        (12, "B8(3,3,1,1;1,1,1,1)"),
        (12, "B8(1,1,2,3;1,1,1,2)"),
        (12, "B8(1,2,2,2;1,1,1,2)"),
        (12, "B8(1,3,2,1;1,1,1,2)"),
        (12, "B8(2,1,2,2;1,1,1,2)"),
        (12, "B8(2,2,2,1;1,1,1,2)"),
        (12, "B8(3,1,2,1;1,1,1,2)"),
        (12, "B8(1,1,1,3;1,1,1,3)"),
        (12, "B8(1,3,1,1;1,1,1,3)"),
        (12, "B8(2,1,1,2;1,1,1,3)"),
        (12, "B8(3,1,1,1;1,1,1,3)"),
        (12, "B8(1,1,3,2;1,1,2,1)"),
        (12, "B8(1,2,2,2;1,1,2,1)"),
        (12, "B8(1,3,1,2;1,1,2,1)"),
        (12, "B8(2,1,3,1;1,1,2,1)"),
        (12, "B8(2,2,2,1;1,1,2,1)"),
        (12, "B8(2,3,1,1;1,1,2,1)"),
        (12, "B8(2,1,1,1;1,1,2,3)"),
        (12, "B8(1,1,3,1;1,1,3,1)"),
        (12, "B8(1,3,1,1;1,1,3,1)"),
        (12, "B8(1,2,1,3;1,2,1,1)"),
        (12, "B8(1,2,2,2;1,2,1,1)"),
        (12, "B8(1,2,3,1;1,2,1,1)"),
        (12, "B8(2,2,1,2;1,2,1,1)"),
        (12, "B8(2,2,2,1;1,2,1,1)"),
        (12, "B8(3,2,1,1;1,2,1,1)"),
        (12, "B8(2,1,1,1;1,2,2,2)"),
        (12, "B8(2,1,1,2;1,3,1,1)"),
        (12, "B8(3,1,1,1;1,3,1,1)"),
        (12, "B8(2,1,1,1;1,3,2,1)"),
        (12, "B8(2,2,1,2;2,1,1,1)"),
        (12, "B8(3,1,2,1;2,1,1,1)"),
        (12, "B8(2,2,1,1;2,1,1,2)"),
        (12, "B8(3,1,1,1;2,1,1,2)"),
        (12, "B8(2,1,2,1;2,1,2,1)"),
        (12, "B8(2,2,1,1;2,1,2,1)"),
        (12, "B8(3,1,1,1;3,1,1,1)"),
        (13, "B8(1,1,2,5;1,1,1,1)"),
        (13, "B8(1,1,5,2;1,1,1,1)"),
        (13, "B8(1,2,1,5;1,1,1,1)"),
        (13, "B8(1,2,2,4;1,1,1,1)"),
        (13, "B8(1,2,3,3;1,1,1,1)"),
        (13, "B8(1,2,4,2;1,1,1,1)"),
        (13, "B8(1,2,5,1;1,1,1,1)"),
        (13, "B8(1,3,2,3;1,1,1,1)"),
        (13, "B8(1,3,3,2;1,1,1,1)"),
        (13, "B8(1,4,2,2;1,1,1,1)"),
        (13, "B8(1,5,1,2;1,1,1,1)"),
        (13, "B8(1,5,2,1;1,1,1,1)"),
        (13, "B8(2,1,2,4;1,1,1,1)"),
        (13, "B8(2,1,5,1;1,1,1,1)"),
        (13, "B8(2,2,1,4;1,1,1,1)"),
        (13, "B8(2,2,2,3;1,1,1,1)"),
        (13, "B8(2,2,3,2;1,1,1,1)"),
        (13, "B8(2,2,4,1;1,1,1,1)"),
        (13, "B8(2,3,2,2;1,1,1,1)"),
        (13, "B8(2,3,3,1;1,1,1,1)"),
        (13, "B8(2,4,2,1;1,1,1,1)"),
        (13, "B8(2,5,1,1;1,1,1,1)"),
        (13, "B8(3,1,2,3;1,1,1,1)"),
        (13, "B8(3,2,1,3;1,1,1,1)"),
        (13, "B8(3,2,2,2;1,1,1,1)"),
        (13, "B8(3,2,3,1;1,1,1,1)"),
        (13, "B8(3,3,2,1;1,1,1,1)"),
        (13, "B8(4,1,2,2;1,1,1,1)"),
        (13, "B8(4,2,1,2;1,1,1,1)"),
        (13, "B8(4,2,2,1;1,1,1,1)"),
        (13, "B8(5,1,2,1;1,1,1,1)"),
        (13, "B8(5,2,1,1;1,1,1,1)"),
        (13, "B8(1,1,1,5;1,1,1,2)"),
        (13, "B8(1,1,4,2;1,1,1,2)"),
        (13, "B8(1,2,3,2;1,1,1,2)"),
        (13, "B8(1,2,4,1;1,1,1,2)"),
        (13, "B8(1,5,1,1;1,1,1,2)"),
        (13, "B8(2,1,1,4;1,1,1,2)"),
        (13, "B8(2,1,4,1;1,1,1,2)"),
        (13, "B8(2,2,3,1;1,1,1,2)"),
        (13, "B8(3,1,1,3;1,1,1,2)"),
        (13, "B8(4,1,1,2;1,1,1,2)"),
        (13, "B8(5,1,1,1;1,1,1,2)"),
        (13, "B8(1,1,3,2;1,1,1,3)"),
        (13, "B8(1,2,3,1;1,1,1,3)"),
        (13, "B8(2,1,3,1;1,1,1,3)"),
        (13, "B8(1,1,2,2;1,1,1,4)"),
        (13, "B8(1,2,2,1;1,1,1,4)"),
        (13, "B8(2,1,2,1;1,1,1,4)"),
        (13, "B8(1,2,1,1;1,1,1,5)"),
        (13, "B8(2,1,1,1;1,1,1,5)"),
        (13, "B8(1,1,2,4;1,1,2,1)"),
        (13, "B8(1,1,5,1;1,1,2,1)"),
        (13, "B8(1,2,1,4;1,1,2,1)"),
        (13, "B8(1,2,2,3;1,1,2,1)"),
        (13, "B8(1,5,1,1;1,1,2,1)"),
        (13, "B8(2,1,2,3;1,1,2,1)"),
        (13, "B8(2,2,1,3;1,1,2,1)"),
        (13, "B8(2,2,2,2;1,1,2,1)"),
        (13, "B8(3,1,2,2;1,1,2,1)"),
        (13, "B8(3,2,1,2;1,1,2,1)"),
        (13, "B8(3,2,2,1;1,1,2,1)"),
        (13, "B8(4,1,2,1;1,1,2,1)"),
        (13, "B8(4,2,1,1;1,1,2,1)"),
        (13, "B8(1,1,2,3;1,1,2,2)"),
        (13, "B8(1,1,3,2;1,1,2,2)"),
        (13, "B8(1,1,4,1;1,1,2,2)"),
        (13, "B8(2,1,1,3;1,1,2,2)"),
        (13, "B8(2,1,2,2;1,1,2,2)"),
        (13, "B8(2,1,3,1;1,1,2,2)"),
        (13, "B8(3,1,1,2;1,1,2,2)"),
        (13, "B8(3,1,2,1;1,1,2,2)"),
        (13, "B8(4,1,1,1;1,1,2,2)"),
        (13, "B8(1,1,3,1;1,1,2,3)"),
        (13, "B8(2,1,2,1;1,1,2,3)"),
        (13, "B8(1,2,1,3;1,1,3,1)"),
        (13, "B8(2,1,2,2;1,1,3,1)"),
        (13, "B8(2,2,1,2;1,1,3,1)"),
        (13, "B8(3,1,2,1;1,1,3,1)"),
        (13, "B8(3,2,1,1;1,1,3,1)"),
        (13, "B8(2,1,1,2;1,1,3,2)"),
        (13, "B8(2,1,2,1;1,1,3,2)"),
        (13, "B8(3,1,1,1;1,1,3,2)"),
        (13, "B8(1,2,1,2;1,1,4,1)"),
        (13, "B8(2,1,2,1;1,1,4,1)"),
        (13, "B8(2,2,1,1;1,1,4,1)"),
        (13, "B8(2,1,1,1;1,1,4,2)"),
        (13, "B8(1,2,1,1;1,1,5,1)"),
        (13, "B8(1,3,2,2;1,2,1,1)"),
        (13, "B8(1,4,1,2;1,2,1,1)"),
        (13, "B8(1,4,2,1;1,2,1,1)"),
        (13, "B8(2,1,1,4;1,2,1,1)"),
        (13, "B8(2,3,2,1;1,2,1,1)"),
        (13, "B8(2,4,1,1;1,2,1,1)"),
        (13, "B8(3,1,1,3;1,2,1,1)"),
        (13, "B8(4,1,1,2;1,2,1,1)"),
        (13, "B8(5,1,1,1;1,2,1,1)"),
        (13, "B8(1,2,3,1;1,2,1,2)"),
        (13, "B8(1,3,2,1;1,2,1,2)"),
        (13, "B8(1,4,1,1;1,2,1,2)"),
        (13, "B8(1,2,2,1;1,2,1,3)"),
        (13, "B8(1,3,1,2;1,2,2,1)"),
        (13, "B8(1,4,1,1;1,2,2,1)"),
        (13, "B8(2,1,1,3;1,2,2,1)"),
        (13, "B8(2,2,1,2;1,2,2,1)"),
        (13, "B8(2,3,1,1;1,2,2,1)"),
        (13, "B8(3,1,1,2;1,2,2,1)"),
        (13, "B8(3,2,1,1;1,2,2,1)"),
        (13, "B8(4,1,1,1;1,2,2,1)"),
        (13, "B8(2,1,1,2;1,2,3,1)"),
        (13, "B8(2,2,1,1;1,2,3,1)"),
        (13, "B8(3,1,1,1;1,2,3,1)"),
        (13, "B8(2,1,1,1;1,2,3,2)"),
        (13, "B8(2,1,1,1;1,2,4,1)"),
        (13, "B8(1,3,1,2;1,3,1,1)"),
        (13, "B8(1,3,2,1;1,3,1,1)"),
        (13, "B8(2,3,1,1;1,3,1,1)"),
        (13, "B8(2,2,1,1;1,3,2,1)"),
        (13, "B8(2,2,1,1;1,4,1,1)"),
        (13, "B8(2,1,1,1;1,5,1,1)"),
        (13, "B8(2,1,1,4;2,1,1,1)"),
        (13, "B8(2,1,2,3;2,1,1,1)"),
        (13, "B8(2,1,3,2;2,1,1,1)"),
        (13, "B8(2,1,4,1;2,1,1,1)"),
        (13, "B8(2,2,2,2;2,1,1,1)"),
        (13, "B8(2,2,3,1;2,1,1,1)"),
        (13, "B8(2,3,2,1;2,1,1,1)"),
        (13, "B8(2,4,1,1;2,1,1,1)"),
        (13, "B8(3,1,1,3;2,1,1,1)"),
        (13, "B8(3,1,2,2;2,1,1,1)"),
        (13, "B8(3,2,1,2;2,1,1,1)"),
        (13, "B8(3,2,2,1;2,1,1,1)"),
        (13, "B8(3,3,1,1;2,1,1,1)"),
        (13, "B8(4,1,1,2;2,1,1,1)"),
        (13, "B8(4,2,1,1;2,1,1,1)"),
        (13, "B8(5,1,1,1;2,1,1,1)"),
        (13, "B8(2,1,1,3;2,1,1,2)"),
        (13, "B8(2,1,2,2;2,1,1,2)"),
        (13, "B8(2,1,3,1;2,1,1,2)"),
        (13, "B8(2,2,2,1;2,1,1,2)"),
        (13, "B8(3,1,1,2;2,1,1,2)"),
        (13, "B8(2,1,2,1;2,1,1,3)"),
        (13, "B8(2,1,2,2;2,1,2,1)"),
        (13, "B8(3,1,1,2;2,1,2,1)"),
        (13, "B8(3,2,1,1;2,1,2,1)"),
        (13, "B8(4,1,1,1;2,1,2,1)"),
        (13, "B8(3,1,1,1;2,1,2,2)"),
        (13, "B8(3,1,1,1;2,1,3,1)"),
        (13, "B8(2,2,2,1;2,2,1,1)"),
        (13, "B8(2,3,1,1;2,2,1,1)"),
        (13, "B8(3,1,1,2;2,2,1,1)"),
        (13, "B8(3,2,1,1;2,2,1,1)"),
        (13, "B8(4,1,1,1;2,2,1,1)"),
        (13, "B8(3,1,1,1;2,2,2,1)"),
        (13, "B8(3,1,1,1;2,3,1,1)"),
        (13, "B8(3,2,1,1;3,1,1,1)"),
    ],
    9: [
        (11, "B9(2,1,2,1;1,1,1,1;1)"),
        (11, "B9(2,1,1,1;1,1,1,2;1)"),
        (11, "B9(1,1,2,1;1,1,2,1;1)"),
        (11, "B9(2,1,1,1;2,1,1,1;1)"),
        (12, "B9(1,2,1,3;1,1,1,1;1)"),
        (12, "B9(1,2,3,1;1,1,1,1;1)"),
        (12, "B9(2,1,2,2;1,1,1,1;1)"),
        (12, "B9(2,2,2,1;1,1,1,1;1)"),
        (12, "B9(3,2,1,1;1,1,1,1;1)"),
        (12, "B9(1,1,1,3;1,1,1,1;2)"),
        (12, "B9(1,1,3,1;1,1,1,1;2)"),
        (12, "B9(2,1,1,2;1,1,1,1;2)"),
        (12, "B9(3,1,1,1;1,1,1,1;2)"),
        (12, "B9(1,2,1,2;1,1,1,2;1)"),
        (12, "B9(2,1,1,2;1,1,1,2;1)"),
        (12, "B9(1,1,2,1;1,1,1,2;2)"),
        (12, "B9(1,2,1,1;1,1,1,3;1)"),
        (12, "B9(1,1,2,2;1,1,2,1;1)"),
        (12, "B9(1,2,1,2;1,1,2,1;1)"),
        (12, "B9(2,1,1,1;1,1,2,1;2)"),
        (12, "B9(1,2,1,1;1,1,2,2;1)"),
        (12, "B9(2,1,1,1;1,1,2,2;1)"),
        (12, "B9(1,2,1,1;1,1,3,1;1)"),
        (12, "B9(3,1,1,1;1,2,1,1;1)"),
        (12, "B9(2,1,1,1;1,2,2,1;1)"),
        (12, "B9(2,2,1,1;2,1,1,1;1)"),
        (13, "B9(1,1,1,5;1,1,1,1;1)"),
        (13, "B9(1,1,2,4;1,1,1,1;1)"),
        (13, "B9(1,1,3,3;1,1,1,1;1)"),
        (13, "B9(1,1,4,2;1,1,1,1;1)"),
        (13, "B9(1,1,5,1;1,1,1,1;1)"),
        (13, "B9(1,2,2,3;1,1,1,1;1)"),
        (13, "B9(1,2,3,2;1,1,1,1;1)"),
        (13, "B9(1,3,2,2;1,1,1,1;1)"),
        (13, "B9(1,4,1,2;1,1,1,1;1)"),
        (13, "B9(1,4,2,1;1,1,1,1;1)"),
        (13, "B9(2,1,1,4;1,1,1,1;1)"),
        (13, "B9(2,1,2,3;1,1,1,1;1)"),
        (13, "B9(2,2,1,3;1,1,1,1;1)"),
        (13, "B9(2,2,2,2;1,1,1,1;1)"),
        (13, "B9(2,3,1,2;1,1,1,1;1)"),
        (13, "B9(2,3,2,1;1,1,1,1;1)"),
        (13, "B9(2,4,1,1;1,1,1,1;1)"),
        (13, "B9(3,1,1,3;1,1,1,1;1)"),
        (13, "B9(3,2,1,2;1,1,1,1;1)"),
        (13, "B9(4,1,1,2;1,1,1,1;1)"),
        (13, "B9(5,1,1,1;1,1,1,1;1)"),
        (13, "B9(1,1,2,3;1,1,1,1;2)"),
        (13, "B9(1,1,3,2;1,1,1,1;2)"),
        (13, "B9(1,2,2,2;1,1,1,1;2)"),
        (13, "B9(1,3,1,2;1,1,1,1;2)"),
        (13, "B9(1,3,2,1;1,1,1,1;2)"),
        (13, "B9(2,2,1,2;1,1,1,1;2)"),
        (13, "B9(2,3,1,1;1,1,1,1;2)"),
        (13, "B9(1,1,2,2;1,1,1,1;3)"),
        (13, "B9(1,2,1,2;1,1,1,1;3)"),
        (13, "B9(1,2,2,1;1,1,1,1;3)"),
        (13, "B9(2,2,1,1;1,1,1,1;3)"),
        (13, "B9(1,1,1,2;1,1,1,1;4)"),
        (13, "B9(1,1,2,1;1,1,1,1;4)"),
        (13, "B9(2,1,1,1;1,1,1,1;4)"),
        (13, "B9(1,1,1,4;1,1,1,2;1)"),
        (13, "B9(1,1,2,3;1,1,1,2;1)"),
        (13, "B9(1,1,3,2;1,1,1,2;1)"),
        (13, "B9(1,1,4,1;1,1,1,2;1)"),
        (13, "B9(1,2,2,2;1,1,1,2;1)"),
        (13, "B9(1,2,3,1;1,1,1,2;1)"),
        (13, "B9(1,3,2,1;1,1,1,2;1)"),
        (13, "B9(1,4,1,1;1,1,1,2;1)"),
        (13, "B9(2,1,1,3;1,1,1,2;1)"),
        (13, "B9(1,1,1,3;1,1,1,2;2)"),
        (13, "B9(1,1,2,2;1,1,1,2;2)"),
        (13, "B9(1,2,1,2;1,1,1,2;2)"),
        (13, "B9(1,2,2,1;1,1,1,2;2)"),
        (13, "B9(1,3,1,1;1,1,1,2;2)"),
        (13, "B9(1,1,1,2;1,1,1,2;3)"),
        (13, "B9(1,2,1,1;1,1,1,2;3)"),
        (13, "B9(1,1,1,3;1,1,1,3;1)"),
        (13, "B9(1,1,2,2;1,1,1,3;1)"),
        (13, "B9(1,1,3,1;1,1,1,3;1)"),
        (13, "B9(1,2,2,1;1,1,1,3;1)"),
        (13, "B9(1,1,2,1;1,1,1,4;1)"),
        (13, "B9(1,1,2,3;1,1,2,1;1)"),
        (13, "B9(1,4,1,1;1,1,2,1;1)"),
        (13, "B9(2,1,1,3;1,1,2,1;1)"),
        (13, "B9(2,2,1,2;1,1,2,1;1)"),
        (13, "B9(2,3,1,1;1,1,2,1;1)"),
        (13, "B9(3,1,1,2;1,1,2,1;1)"),
        (13, "B9(3,2,1,1;1,1,2,1;1)"),
        (13, "B9(4,1,1,1;1,1,2,1;1)"),
        (13, "B9(1,3,1,1;1,1,2,1;2)"),
        (13, "B9(2,2,1,1;1,1,2,1;2)"),
        (13, "B9(1,2,1,1;1,1,2,1;3)"),
        (13, "B9(1,1,2,2;1,1,2,2;1)"),
        (13, "B9(2,1,1,2;1,1,2,2;1)"),
        (13, "B9(1,2,1,1;1,1,2,2;2)"),
        (13, "B9(2,1,1,2;1,1,3,1;1)"),
        (13, "B9(2,2,1,1;1,1,3,1;1)"),
        (13, "B9(3,1,1,1;1,1,3,1;1)"),
        (13, "B9(2,1,1,1;1,1,3,2;1)"),
        (13, "B9(2,1,1,1;1,1,4,1;1)"),
        (13, "B9(1,2,2,2;1,2,1,1;1)"),
        (13, "B9(1,3,1,2;1,2,1,1;1)"),
        (13, "B9(1,3,2,1;1,2,1,1;1)"),
        (13, "B9(2,1,1,3;1,2,1,1;1)"),
        (13, "B9(2,2,1,2;1,2,1,1;1)"),
        (13, "B9(2,3,1,1;1,2,1,1;1)"),
        (13, "B9(3,1,1,2;1,2,1,1;1)"),
        (13, "B9(1,2,1,2;1,2,1,1;2)"),
        (13, "B9(1,2,2,1;1,2,1,1;2)"),
        (13, "B9(2,1,1,2;1,2,1,1;2)"),
        (13, "B9(2,2,1,1;1,2,1,1;2)"),
        (13, "B9(2,1,1,1;1,2,1,1;3)"),
        (13, "B9(1,2,2,1;1,2,1,2;1)"),
        (13, "B9(1,3,1,1;1,2,1,2;1)"),
        (13, "B9(1,3,1,1;1,2,2,1;1)"),
        (13, "B9(2,1,1,2;1,2,2,1;1)"),
        (13, "B9(2,2,1,1;1,2,2,1;1)"),
        (13, "B9(2,1,1,2;1,3,1,1;1)"),
        (13, "B9(2,2,1,1;1,3,1,1;1)"),
        (13, "B9(2,1,1,1;1,3,1,1;2)"),
        (13, "B9(2,1,1,1;1,4,1,1;1)"),
        (13, "B9(2,3,1,1;2,1,1,1;1)"),
        (13, "B9(2,2,1,1;2,2,1,1;1)"),
    ],
    10: [
        (12, "B10(1,1,2,1,2;1,1,1,1,1)"),
        (12, "B10(1,2,1,2,1;1,1,1,1,1)"),
        (12, "B10(2,1,2,1,1;1,1,1,1,1)"),
        (12, "B10(1,1,1,1,2;1,1,1,1,2)"),
        (12, "B10(1,2,1,1,1;1,1,1,1,2)"),
        (12, "B10(2,1,1,1,1;1,1,1,1,2)"),
        (12, "B10(1,1,2,1,1;1,1,1,2,1)"),
        (12, "B10(1,2,1,1,1;1,1,1,2,1)"),
        (12, "B10(1,1,2,1,1;1,1,2,1,1)"),
        (12, "B10(2,1,1,1,1;1,2,1,1,1)"),
        (13, "B10(1,1,1,1,4;1,1,1,1,1)"),
        (13, "B10(1,1,1,2,3;1,1,1,1,1)"),
        (13, "B10(1,1,1,3,2;1,1,1,1,1)"),
        (13, "B10(1,1,1,4,1;1,1,1,1,1)"),
        (13, "B10(1,1,2,2,2;1,1,1,1,1)"),
        (13, "B10(1,1,2,3,1;1,1,1,1,1)"),
        (13, "B10(1,1,3,2,1;1,1,1,1,1)"),
        (13, "B10(1,1,4,1,1;1,1,1,1,1)"),
        (13, "B10(1,2,1,1,3;1,1,1,1,1)"),
        (13, "B10(1,2,1,2,2;1,1,1,1,1)"),
        (13, "B10(1,2,2,1,2;1,1,1,1,1)"),
        (13, "B10(1,2,2,2,1;1,1,1,1,1)"),
        (13, "B10(1,2,3,1,1;1,1,1,1,1)"),
        (13, "B10(1,3,1,1,2;1,1,1,1,1)"),
        (13, "B10(1,3,2,1,1;1,1,1,1,1)"),
        (13, "B10(1,4,1,1,1;1,1,1,1,1)"),
        (13, "B10(2,1,1,1,3;1,1,1,1,1)"),
        (13, "B10(2,1,1,2,2;1,1,1,1,1)"),
        (13, "B10(2,1,1,3,1;1,1,1,1,1)"),
        (13, "B10(2,1,2,2,1;1,1,1,1,1)"),
        (13, "B10(2,2,1,1,2;1,1,1,1,1)"),
        (13, "B10(2,2,1,2,1;1,1,1,1,1)"),
        (13, "B10(2,2,2,1,1;1,1,1,1,1)"),
        (13, "B10(2,3,1,1,1;1,1,1,1,1)"),
        (13, "B10(3,1,1,1,2;1,1,1,1,1)"),
        (13, "B10(3,1,1,2,1;1,1,1,1,1)"),
        (13, "B10(3,2,1,1,1;1,1,1,1,1)"),
        (13, "B10(4,1,1,1,1;1,1,1,1,1)"),
        (13, "B10(1,1,1,2,2;1,1,1,1,2)"),
        (13, "B10(1,1,1,3,1;1,1,1,1,2)"),
        (13, "B10(1,1,2,2,1;1,1,1,1,2)"),
        (13, "B10(1,1,3,1,1;1,1,1,1,2)"),
        (13, "B10(1,2,2,1,1;1,1,1,1,2)"),
        (13, "B10(2,1,1,2,1;1,1,1,1,2)"),
        (13, "B10(1,1,1,2,1;1,1,1,1,3)"),
        (13, "B10(1,1,2,1,1;1,1,1,1,3)"),
        (13, "B10(1,1,1,2,2;1,1,1,2,1)"),
        (13, "B10(1,1,1,3,1;1,1,1,2,1)"),
        (13, "B10(1,1,2,2,1;1,1,1,2,1)"),
        (13, "B10(1,2,1,1,2;1,1,1,2,1)"),
        (13, "B10(2,1,1,1,2;1,1,1,2,1)"),
        (13, "B10(2,1,1,2,1;1,1,1,2,1)"),
        (13, "B10(2,2,1,1,1;1,1,1,2,1)"),
        (13, "B10(3,1,1,1,1;1,1,1,2,1)"),
        (13, "B10(1,1,2,1,1;1,1,1,2,2)"),
        (13, "B10(2,1,1,1,1;1,1,1,2,2)"),
        (13, "B10(2,1,1,1,1;1,1,1,3,1)"),
        (13, "B10(1,2,1,1,2;1,1,2,1,1)"),
        (13, "B10(1,2,2,1,1;1,1,2,1,1)"),
        (13, "B10(1,3,1,1,1;1,1,2,1,1)"),
        (13, "B10(2,1,1,1,2;1,1,2,1,1)"),
        (13, "B10(2,1,1,2,1;1,1,2,1,1)"),
        (13, "B10(2,2,1,1,1;1,1,2,1,1)"),
        (13, "B10(3,1,1,1,1;1,1,2,1,1)"),
        (13, "B10(1,2,1,1,1;1,1,2,2,1)"),
        (13, "B10(2,1,1,1,1;1,1,2,2,1)"),
        (13, "B10(1,2,1,1,1;1,1,3,1,1)"),
        (13, "B10(2,1,1,1,1;1,1,3,1,1)"),
        (13, "B10(1,2,1,1,2;1,2,1,1,1)"),
        (13, "B10(1,2,2,1,1;1,2,1,1,1)"),
        (13, "B10(1,3,1,1,1;1,2,1,1,1)"),
        (13, "B10(2,2,1,1,1;1,2,1,1,1)"),
        (13, "B10(2,1,1,1,1;1,2,2,1,1)"),
        (13, "B10(2,1,1,1,2;2,1,1,1,1)"),
        (13, "B10(2,1,1,2,1;2,1,1,1,1)"),
        (13, "B10(2,1,2,1,1;2,1,1,1,1)"),
        (13, "B10(2,2,1,1,1;2,1,1,1,1)"),
        (13, "B10(3,1,1,1,1;2,1,1,1,1)"),
    ],
}

"""Published reference rows used as end-to-end fixtures.

Each row: (degree, flavor, orbit, target, expected, printed map).  Maps are
transcribed from the tables to plain text (``x`` printed as ``z``).  Expected
values: ratio rows give the printed float; count rows give (count, (m, n));
cycle/tail rows give (m, n).
"""

ROWS = [
    # degree 2, polynomial
    (2, "polynomial", [0, -2, 1, -3], "height_ratio", 0.006604, "1/6z^2 - 7/6z - 2"),
    (2, "polynomial", [0, 18, 21, 14], "height_ratio", 0.01346, "-5/42z^2 + 97/42z + 18"),
    (2, "polynomial", [0, 1, -1, 2], "preperiodic", (9, (2, 3)), "-1/2z^2 - 3/2z + 1"),
    (2, "polynomial", [0, 1, 4, 7], "preperiodic", (9, (1, 3)), "-1/2z^2 + 7/2z + 1"),
    (2, "polynomial", [0, 1, 4, 7], "cycle", (1, 3), "-1/2z^2 + 7/2z + 1"),
    (2, "polynomial", [0, 4, 2, 1], "tail", (2, 2), "1/2z^2 - 5/2z + 4"),
    (2, "polynomial", [0, 1, -3, 16], "tail", (2, 2), "1/4z^2 - 17/4z + 1"),
    # degree 2, rational
    (2, "rational", [0, -1, -16, 4, 8, 2], "height_ratio", 0.0004657, "(592z^2 - 3424z + 1024)/(173z^2 - 536z - 1024)"),
    (2, "rational", [0, 1, 6, -6, -5, -3], "height_ratio", 0.0011830, "(285z^2 + 2085z + 990)/(-79z^2 - 351z + 990)"),
    (2, "rational", [0, -1, 2, 6, 4, 5], "preperiodic", (14, (1, 5)), "(83z^2 - 403z - 66)/(22z^2 - 122z + 66)"),
    (2, "rational", [0, 1, -1, 3, -6, -15], "preperiodic", (14, (3, 3)), "(9z^2 + 84z - 45)/(z^2 - 4z - 45)"),
    (2, "rational", [0, 1, -1, -9, -14, 26], "cycle", (0, 6), "(83z^2 - 2179z + 546)/(73z^2 + 931z + 546)"),
    (2, "rational", [0, 1, 3, -8, -7, -11], "tail", (6, 2), "(43z^2 + 106z + 175)/(-14z^2 - 53z + 175)"),
    # degree 3, polynomial
    (3, "polynomial", [0, 1, 2, 4, 3], "height_ratio", 0.00016738, "-1/3z^3 + 3/2z^2 - 1/6z + 1"),
    (3, "polynomial", [0, 1, -3, -1, 4], "preperiodic", (10, (3, 2)), "1/3z^3 - 1/2z^2 - 23/6z + 1"),
    (3, "polynomial", [0, 1, -1, 2, -2], "cycle", (0, 5), "1/3z^3 - 1/2z^2 - 11/6z + 1"),
    (3, "polynomial", [0, 1, 7, 3, 8], "tail", (4, 1), "37/168z^3 - 19/7z^2 + 1427/168z + 1"),
    # degree 3, rational
    (3, "rational", [0, 1, -6, -1, -4, -3, 6, 3], "height_ratio", 3.29835e-6,
     "(21z^3 + 312z^2 + 579z - 72)/(26z^3 + 47z^2 - 141z - 72)"),
    (3, "rational", [0, 1, 2, 3, 5, 4, -7, 6], "preperiodic", (13, (6, 2)),
     "(27z^3 - 298z^2 + 641z + 630)/(9z^3 - 56z^2 - 83z + 630)"),
    (3, "rational", [0, 1, 5, -9, -5, -3, -1, 3], "cycle", (0, 8),
     "(34z^3 - 21z^2 - 238z - 15)/(-4z^3 + 19z^2 - 48z - 15)"),
    (3, "rational", [0, 1, 7, -1, -3, 5, -5, 3], "tail", (7, 1),
     "(14z^3 - 165z^2 + 214z + 105)/(12z^3 - 45z^2 - 48z + 105)"),
    # degree 4, polynomial
    (4, "polynomial", [0, 1, 4, 5, -1, 3], "height_ratio", 2.9015e-6, "3/40z^4 - 14/15z^3 + 97/40z^2 + 43/30z + 1"),
    (4, "polynomial", [0, 1, 6, -3, -6, -1], "preperiodic", (10, (3, 3)), "-1/60z^4 - 2/15z^3 + 31/60z^2 + 139/30z + 1"),
    (4, "polynomial", [0, 1, 4, -1, -2, 3], "cycle", (0, 6), "11/60z^4 - 29/30z^3 - 11/60z^2 + 119/30z + 1"),
    (4, "polynomial", [0, 1, -1, 2, -3, 4], "tail", (5, 1), "7/120z^4 + 1/20z^3 - 67/120z^2 - 31/20z + 1"),
    # degree 4, rational
    (4, "rational", [0, -1, -4, -5, -2, -3, 5, 3, 2, 1], "height_ratio", 3.4953e-8,
     "(27z^4 + 220z^3 + 166z^2 - 628z - 25)/(8z^4 + 43z^3 + 135z^2 + 269z + 25)"),
    (4, "rational", [0, 1, 3, 2, 5, -2, -3, -4, -5, -9], "preperiodic", (11, (7, 3)),
     "(61z^4 + 73z^3 - 1441z^2 + 1007z + 540)/(-13z^4 - 15z^3 + 161z^2 - 593z + 540)"),
    (4, "rational", [0, -1, -2, -4, 3, 6, 5, 4, -5, 1], "cycle", (0, 10),
     "(18z^4 - 143z^3 - 828z^2 + 5963z - 5010)/(-14z^4 + 158z^3 - 391z^2 - 1373z + 5010)"),
    (4, "rational", [0, -1, -4, 4, 2, -2, 1, -3, 3, 6], "tail", (8, 2),
     "(40z^4 - 153z^3 - 67z^2 + 558z + 72)/(8z^4 - 20z^3 + 34z^2 - 100z - 72)"),
    # degree 5, polynomial
    (5, "polynomial", [0, -1, -2, -6, -4, -5, -3], "height_ratio", 9.1519e-9,
     "-1/40z^5 - 1/2z^4 - 27/8z^3 - 17/2z^2 - 23/5z - 1"),
    (5, "polynomial", [0, -1, 3, -7, -6, -4, 5], "preperiodic", (11, (5, 2)),
     "-1/315z^5 - 1/126z^4 + 2/9z^3 + 11/63z^2 - 851/210z - 1"),
    (5, "polynomial", [0, 1, 7, 5, -1, 3, 8], "cycle", (0, 8),
     "-43/1680z^5 + 157/336z^4 - 125/48z^3 + 1187/336z^2 + 3889/840z + 1"),
    (5, "polynomial", [0, 1, 3, 2, 4, -1, 6], "tail", (6, 1), "-1/60z^5 + 1/3z^4 - 23/12z^3 + 19/6z^2 + 13/30z + 1"),
    # degree 6, polynomial
    (6, "polynomial", [0, 1, -1, -4, -7, -3, -6, -9], "height_ratio", 1.8372e-9,
     "-29/5040z^6 - 71/560z^5 - 985/1008z^4 - 341/112z^3 - 6343/2520z^2 + 327/70z + 1"),
    (6, "polynomial", [0, 1, -3, -4, -5, -1, 2, -7], "preperiodic", (12, (5, 3)),
     "-1/504z^6 - 1/140z^5 + 59/504z^4 + 9/28z^3 - 407/252z^2 - 197/70z + 1"),
    (6, "polynomial", [0, 1, 3, 8, 9, 7, 10, 6], "preperiodic", (12, (6, 2)),
     "1/1260z^6 - 1/42z^5 + 17/63z^4 - 10/7z^3 + 4069/1260z^2 - 1/21z + 1"),
    # degree 7, polynomial (tables print the orbit without its leading 0)
    (7, "polynomial", [0, -1, 11, 12, 1, -2, 10, 13, 9], "height_ratio", 1.7158e-10,
     "73/196560z^7 - 1091/77220z^6 + 29449/154440z^5 - 31181/30888z^4 + 271361/308880z^3"
     " + 1007507/154440z^2 - 340972/45045z - 1"),
    (7, "polynomial", [0, 1, 2, -8, -1, -4, -6, -2, -7], "preperiodic", (13, (9, 1)),
     "1/1260z^7 + 1/72z^6 + 23/360z^5 - 1/9z^4 - 511/360z^3 - 137/72z^2 + 1829/420z + 1"),
    (7, "polynomial", [0, -1, -6, -2, -8, -9, -4, -5, -3], "preperiodic", (12, (6, 4)),
     "-1/1260z^7 - 1/45z^6 - 89/360z^5 - 25/18z^4 - 1409/360z^3 - 323/90z^2 + 437/105z - 1"),
]

"""Frozen opening coefficients for the families this package enumerates.

Every list starts at length 0.  The values are pinned here so that the
series catalog, the brute-force enumerators, and the published sequence
fixtures can all be checked against one another without any of them being
the single source of truth.  Do not regenerate these from the code under
test; that would make the checks circular.
"""

# daps (nonempty, floor 0, end on the axis)
DAP_COUNTS = (0, 0, 1, 1, 2, 4, 8, 17, 37, 82, 185)

# primes: daps touching the axis only at the end, final drop >= 2
PRIME_COUNTS = (0, 0, 0, 1, 1, 2, 4, 8, 17, 37, 82)

# gdaps (may dip below; empty path included at n = 0)
GDAP_COUNTS = (1, 0, 2, 3, 7, 17, 40, 97, 238, 587, 1458)

# gdaps starting with an up-step, plus the empty path
GDAP_UP_COUNTS = (1, 0, 1, 2, 4, 10, 24, 58, 143, 354, 881)

# ... split by final step kind (the empty path counted in neither)
GDAP_UP_DOWN_COUNTS = (0, 0, 1, 1, 2, 5, 11, 26, 63, 153, 376)
GDAP_UP_UP_COUNTS = (0, 0, 0, 1, 2, 5, 13, 32, 80, 201, 505)

# gdaps starting with a down-step, split likewise
GDAP_DOWN_COUNTS = (0, 0, 1, 1, 3, 7, 16, 39, 95, 233, 577)
GDAP_DOWN_DOWN_COUNTS = (0, 0, 0, 0, 1, 2, 5, 13, 32, 80, 201)
GDAP_DOWN_UP_COUNTS = GDAP_UP_DOWN_COUNTS

# unconstrained prefixes ending on the axis, by final step kind
PREFIX_END0_UP_COUNTS = (0, 0, 1, 2, 4, 10, 24, 58, 143, 354, 881)
PREFIX_END0_DOWN_COUNTS = (0, 0, 1, 1, 3, 7, 16, 39, 95, 233, 577)

# unconstrained prefixes ending strictly above the axis (all k >= 1 pooled)
PREFIX_POSITIVE_COUNTS = (0, 1, 1, 4, 9, 22, 55, 136, 339, 849, 2132)

# unconstrained prefixes ending at a fixed negative ordinate
PREFIX_END_MINUS1_COUNTS = (0, 1, 2, 4, 10, 24, 58, 143, 354, 881, 2204)
PREFIX_END_MINUS2_COUNTS = (0, 1, 2, 5, 13, 32, 80, 201, 505, 1273, 3217)

# prefixes with floor m, any final ordinate
FLOORED_PREFIX_COUNTS = {
    -1: (1, 2, 4, 8, 17, 37, 82, 185, 423, 978, 2283),
    -2: (1, 3, 6, 13, 29, 65, 148, 341, 793, 1860, 4395),
}

# paths in the band [0, t] ending on the axis (empty path excluded)
BAND_LOW_COUNTS = {
    1: (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1),
    2: (0, 0, 1, 1, 1, 3, 2, 6, 6, 11, 16),
    3: (0, 0, 1, 1, 2, 3, 7, 9, 22, 32, 66),
    4: (0, 0, 1, 1, 2, 4, 7, 16, 27, 63, 112),
}

# paths in the band [-t, t] ending on the axis (empty path included)
BAND_SYM_COUNTS = {
    1: (1, 0, 2, 1, 3, 4, 5, 10, 11, 21, 27),
    2: (1, 0, 2, 3, 5, 13, 22, 48, 93, 190, 375),
    3: (1, 0, 2, 3, 7, 15, 36, 75, 176, 386, 869),
}

# daps whose arch decomposition never gains height left to right
SPECIAL_H_COUNTS = (1, 0, 1, 1, 2, 3, 6, 10, 20, 36, 72, 136, 273)

"""Reference decomposition tables used by the verification suites.

These are the expected low-degree homotopy decompositions of the rank-2
odd-determinant moduli targets, as label -> multiplicity maps, plus the
leading-label rule for the genus-2 model in higher degrees.
"""


# genus 2, degrees 2..7
GENUS2_LOW_DEGREE = {
    2: {(0, 0): 1},
    3: {(1, 0): 1},
    4: {(1, 0): 1},
    5: {(0, 1): 1, (0, 0): 1},
    6: {(2, 0): 1, (0, 1): 1},
    7: {(1, 1): 1, (2, 0): 1, (1, 0): 1},
}


def leading_label(n: int):
    """Dominance-maximal label expected in the genus-2 stage of degree n,
    for n >= 4: (m-1, 0) when n = 2m, (m-2, 1) when n = 2m+1."""
    if n < 4:
        raise ValueError("leading labels start at degree 4")
    m = n // 2
    if n % 2 == 0:
        return (m - 1, 0)
    return (m - 2, 1)


def low_degree_table(g: int) -> dict:
    """Expected stage decompositions through degree 2g+1 for genus > 2."""
    if g <= 2:
        raise ValueError("this table is for genus > 2")
    zero = (0,) * g
    e1 = tuple(1 if i == 0 else 0 for i in range(g))
    e2 = tuple(1 if i == 1 else 0 for i in range(g))
    table = {2: {zero: 1}, 3: {e1: 1}, 4: {zero: 1}}
    for n in range(5, 2 * g - 1):
        table[n] = {}
    table[2 * g - 1] = {zero: 1}
    table[2 * g] = {e1: 1}
    table[2 * g + 1] = {e2: 1, zero: 1}
    return table


def invariant_generator_degrees(g: int):
    """Generator degrees of the finite invariant-subring model."""
    return sorted([2, 4, 6, 2 * g - 1, 2 * g + 1, 2 * g + 3])

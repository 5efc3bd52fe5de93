"""Pure-Python Freudenthal kernel (fallback for the compiled ``_kernels``).

Weights are integer Dynkin-label tuples.  ``gram`` is the integer matrix
``D * (omega_i, omega_j)`` for a common denominator ``D``; the factor cancels
in the recursion.
"""


def _to_dominant(v, cartan, rank):
    v = list(v)
    while True:
        for i in range(rank):
            c = v[i]
            if c < 0:
                row = cartan[i]
                for j in range(rank):
                    v[j] -= c * row[j]
                break
        else:
            return tuple(v)


def freudenthal_dominant(rank, cartan, pos, gram, dominants):
    """Multiplicities of the dominant weights ``dominants`` of V_lambda.

    ``dominants[0]`` must be the highest weight and the list must be sorted
    by depth below it.  Returns a list of ints aligned with ``dominants``.
    """
    index = {d: i for i, d in enumerate(dominants)}
    g_pos = [[sum(gram[i][j] * a[j] for j in range(rank)) for i in range(rank)] for a in pos]

    def norm(v):
        return sum(v[i] * gram[i][j] * v[j] for i in range(rank) for j in range(rank))

    top = norm([x + 1 for x in dominants[0]])
    mult = [0] * len(dominants)
    mult[0] = 1
    for t in range(1, len(dominants)):
        mu = dominants[t]
        acc = 0
        for a, ga in zip(pos, g_pos):
            nu = list(mu)
            while True:
                for j in range(rank):
                    nu[j] += a[j]
                k = index.get(_to_dominant(nu, cartan, rank))
                if k is None:
                    break
                acc += mult[k] * sum(nu[j] * ga[j] for j in range(rank))
        denom = top - norm([x + 1 for x in mu])
        m, rem = divmod(2 * acc, denom)
        if rem:
            raise ArithmeticError(f"non-integral multiplicity at {mu}")
        mult[t] = m
    return mult

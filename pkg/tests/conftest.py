import pytest

from g2cy import g2_parabolic, g2_root_system


@pytest.fixture(scope="session")
def rs():
    return g2_root_system()


@pytest.fixture(scope="session")
def P1():
    return g2_parabolic("P1")


@pytest.fixture(scope="session")
def P2():
    return g2_parabolic("P2")


@pytest.fixture(scope="session")
def B():
    return g2_parabolic("B")


@pytest.fixture(scope="session")
def parabolics(P1, P2, B):
    return (P1, P2, B)


def p_dominant_box(P, bound=6):
    """All p-dominant weights with coordinates in [-bound, bound]."""
    out = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if P.is_p_dominant((a, b)):
                out.append((a, b))
    return out


def oracle_dim_det(name, w):
    """Closed-form rank and determinant, independent of the reps machinery."""
    a, b = w
    if name == "P1":
        return b + 1, (a * (b + 1) + b * (b + 1) // 2, 0)
    if name == "P2":
        return a + 1, (0, (a + 1) * b + 3 * a * (a + 1) // 2)
    return 1, (a, b)


def oracle_enumerate(name, dim_x):
    """Naive bounded multiset enumeration over dominant weights <= (5,5).

    Scans multisets of up to six summands; partial sums only ever grow, so a
    branch whose determinant already exceeds the target is dead.
    """
    P = g2_parabolic(name)
    target_rank = P.dim - dim_x
    target_det = P.anticanonical
    pool = [(a, b) for a in range(6) for b in range(6) if (a, b) != (0, 0)]
    found = set()

    def extend(start, acc, rank, det):
        if rank == target_rank and det == target_det:
            found.add(tuple(sorted(acc)))
        if len(acc) == 6 or rank >= target_rank:
            return
        for idx in range(start, len(pool)):
            w = pool[idx]
            d, dt = oracle_dim_det(name, w)
            ndet = tuple(x + y for x, y in zip(det, dt))
            if rank + d > target_rank or any(x > y for x, y in zip(ndet, target_det)):
                continue
            acc.append(w)
            extend(idx, acc, rank + d, ndet)
            acc.pop()

    extend(0, [], 0, (0, 0))
    return found

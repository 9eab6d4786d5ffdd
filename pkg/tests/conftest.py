from math import gcd

import pytest

from puregaps import KummerCurve


def small_curves(max_genus: int = 10) -> list[KummerCurve]:
    """All coprime (m, r) with genus at most max_genus, branch multiplicity 1."""
    out = []
    for m in range(2, 2 * max_genus + 2):
        for r in range(2, 2 * max_genus + 2):
            if (m - 1) * (r - 1) <= 2 * max_genus and gcd(m, r) == 1:
                out.append(KummerCurve(m, r))
    return out


@pytest.fixture(scope="session")
def corpus() -> list[KummerCurve]:
    return small_curves()

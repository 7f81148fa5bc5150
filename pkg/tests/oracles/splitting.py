"""c_k(Sym^2 E) as a polynomial in c_1(E), ..., c_r(E), from the Chern roots."""

from functools import lru_cache

from sympy import Poly, expand, symbols
from sympy.polys.polyfuncs import symmetrize


@lru_cache(maxsize=None)
def sym2_chern_polynomial(rank: int, k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Terms (exponents of c_1..c_r, coefficient) of c_k(Sym^2 E) for a rank-r bundle E."""
    roots = symbols(f"x1:{rank + 1}")
    total = 1
    for i in range(rank):
        for j in range(i, rank):
            total *= 1 + roots[i] + roots[j]
    graded = Poly(expand(total), *roots)
    component = sum(
        (coefficient * _monomial(roots, exponents) for exponents, coefficient in graded.terms() if sum(exponents) == k),
        0,
    )
    if component == 0:
        return ()
    elementary, remainder, definitions = symmetrize(component, *roots, formal=True)
    assert remainder == 0
    names = [name for name, _ in definitions]
    return tuple((exponents, int(c)) for exponents, c in Poly(elementary, *names).terms())


def _monomial(roots, exponents):
    result = 1
    for root, e in zip(roots, exponents):
        result *= root**e
    return result


def evaluate(terms, classes):
    """Substitutes ring classes c_1..c_r into the polynomial terms."""
    ring = classes[0].ring
    result = ring.zero()
    for exponents, coefficient in terms:
        monomial = ring.one()
        for c, e in zip(classes, exponents):
            monomial = monomial * c**e
        result = result + monomial.scale(coefficient)
    return result

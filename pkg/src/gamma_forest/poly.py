"""Exact integer polynomials, palindromy, and the gamma basis.

Every polynomial here has arbitrary-precision integer coefficients and a
unique normal form: the zero polynomial is the empty coefficient tuple, and
no other polynomial carries trailing zero coefficients.  A palindromic
polynomial of degree d can be rewritten in the basis t^j (1+t)^(d-2j) for
0 <= j <= d // 2; the coordinate vector in that basis is a GammaVector.

The module also builds the concrete polynomials the rest of the package
verifies against: the product form of the tree descent polynomial, its
closed-form gamma coordinates, and the classical Eulerian polynomial with
its gamma interpretation over permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable


class NotPalindromicError(ValueError):
    """Raised when a gamma-basis conversion is asked of an asymmetric polynomial."""


@dataclass(frozen=True, init=False)
class IntPolynomial:
    """A dense univariate polynomial over the integers.

    coeffs[i] is the coefficient of t^i.  Trailing zeros are stripped on
    construction, so equal polynomials compare equal structurally.

    >>> IntPolynomial([2, 5, 2]).degree
    2
    >>> IntPolynomial([0, 0]) == IntPolynomial([])
    True
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        """
        >>> IntPolynomial([1, 1]) + IntPolynomial([1, -1])
        IntPolynomial(coeffs=(2,))
        """
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        """
        >>> IntPolynomial([2, 1]) * IntPolynomial([1, 2])
        IntPolynomial(coeffs=(2, 5, 2))
        """
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(out)

    def __call__(self, t):
        """Horner evaluation; exact for int and Fraction arguments.

        >>> IntPolynomial([2, 5, 2])(1)
        9
        """
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


@dataclass(frozen=True, init=False)
class GammaVector:
    """Coordinates of a palindromic polynomial in the gamma basis.

    gammas[j] multiplies t^j (1+t)^(degree - 2j).  The length is pinned to
    degree // 2 + 1 so that vectors of equal degree are directly comparable;
    for the zero polynomial the degree is -1 and the vector is empty.
    """

    gammas: tuple[int, ...]
    degree: int

    def __init__(self, gammas: Iterable[int], degree: int):
        gs = tuple(gammas)
        if len(gs) != degree // 2 + 1:
            raise ValueError(
                f"gamma vector of degree {degree} needs {degree // 2 + 1} "
                f"entries, got {len(gs)}"
            )
        object.__setattr__(self, "gammas", gs)
        object.__setattr__(self, "degree", degree)

    def is_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.gammas)


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Coefficientwise sum with trailing zeros stripped."""
    return p + q


def multiply(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Exact convolution product."""
    return p * q


def evaluate(p: IntPolynomial, t):
    """Evaluate p at t by Horner's rule; exact big-integer arithmetic."""
    return p(t)


def is_palindromic(p: IntPolynomial) -> bool:
    """True iff coeffs read the same in both directions.

    The zero polynomial is palindromic.

    >>> is_palindromic(IntPolynomial([1, 4, 1]))
    True
    >>> is_palindromic(IntPolynomial([1, 2]))
    False
    """
    cs = p.coeffs
    return all(cs[i] == cs[-1 - i] for i in range(len(cs) // 2))


def _gamma_term(j: int, degree: int) -> IntPolynomial:
    # t^j (1+t)^(degree - 2j)
    binom = IntPolynomial([1])
    one_plus_t = IntPolynomial([1, 1])
    for _ in range(degree - 2 * j):
        binom = binom * one_plus_t
    return IntPolynomial([0] * j + list(binom.coeffs))


def to_gamma_basis(p: IntPolynomial) -> GammaVector:
    """Change of basis into the gamma basis by iterated peeling.

    Peeling reads gamma_j off the residue's t^j coefficient, then subtracts
    gamma_j t^j (1+t)^(d-2j); entries may be negative.  Requires a
    palindromic input.

    >>> to_gamma_basis(IntPolynomial([2, 5, 2])).gammas
    (2, 1)
    >>> to_gamma_basis(IntPolynomial([1, 4, 1])).gammas
    (1, 2)
    """
    if not is_palindromic(p):
        raise NotPalindromicError(f"polynomial {list(p.coeffs)} is not palindromic")
    d = p.degree
    residue = p
    gammas = []
    for j in range(d // 2 + 1):
        c = residue.coeffs[j] if j < len(residue.coeffs) else 0
        gammas.append(c)
        if c:
            term = _gamma_term(j, d)
            residue = residue + IntPolynomial([-c * x for x in term.coeffs])
    if residue.coeffs:
        raise NotPalindromicError(f"peeling left a nonzero residue for {list(p.coeffs)}")
    return GammaVector(gammas, d)


def from_gamma_basis(g: GammaVector) -> IntPolynomial:
    """Reassemble sum of gamma_j t^j (1+t)^(d-2j); inverse of to_gamma_basis.

    >>> from_gamma_basis(GammaVector([2, 1], 2)).coeffs
    (2, 5, 2)
    >>> from_gamma_basis(GammaVector([6, 8], 3)).coeffs
    (6, 26, 26, 6)
    """
    out = IntPolynomial()
    for j, c in enumerate(g.gammas):
        if c:
            out = out + _gamma_term(j, g.degree) * IntPolynomial([c])
    return out


def drake_polynomial(n: int) -> IntPolynomial:
    """Product form of the descent polynomial of rooted labeled trees on [n].

    Expands prod_{i=1}^{n-1} ((n-i) + i t) exactly; degree n-1, palindromic,
    and its value at 1 is n^(n-1).

    >>> drake_polynomial(3).coeffs
    (2, 5, 2)
    >>> drake_polynomial(1).coeffs
    (1,)
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    out = IntPolynomial([1])
    for i in range(1, n):
        out = out * IntPolynomial([n - i, i])
    return out


def gamma_closed_form(n: int) -> GammaVector:
    """Closed-form gamma coordinates of drake_polynomial(n).

    For odd n the j-th entry sums over j-subsets J of {1, ..., (n-1)/2} the
    product of (n-2i)^2 over i in J times s(n-s) over the remaining s; for
    even n the index set is {1, ..., (n-2)/2} and the sum carries a factor
    n/2.  Subsets are iterated explicitly.

    >>> gamma_closed_form(3).gammas
    (2, 1)
    >>> gamma_closed_form(5).gammas
    (24, 58, 9)
    >>> gamma_closed_form(4).gammas
    (6, 8)
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n % 2 == 1:
        q = (n - 1) // 2
        prefactor = 1
    else:
        q = (n - 2) // 2
        prefactor = n // 2
    index_set = range(1, q + 1)
    gammas = []
    for j in range(q + 1):
        total = 0
        for used in combinations(index_set, j):
            term = 1
            for i in used:
                term *= (n - 2 * i) ** 2
            rest = set(index_set) - set(used)
            for s in rest:
                term *= s * (n - s)
            total += term
        gammas.append(prefactor * total)
    return GammaVector(gammas, n - 1)


def _descents(word: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def eulerian_polynomial(n: int) -> IntPolynomial:
    """Descent generating polynomial over all permutations of [n].

    Enumerates the n! permutations directly; intended for small n.

    >>> eulerian_polynomial(3).coeffs
    (1, 4, 1)
    >>> eulerian_polynomial(4).coeffs
    (1, 11, 11, 1)
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    counts = [0] * n
    for sigma in permutations(range(1, n + 1)):
        counts[_descents(sigma)] += 1
    return IntPolynomial(counts)


def eulerian_gamma_count(n: int) -> GammaVector:
    """Gamma coordinates of the Eulerian polynomial, counted combinatorially.

    gamma_j is the number of permutations of [n] with j descents, no two
    adjacent descents, and no descent in the last position; this agrees with
    to_gamma_basis(eulerian_polynomial(n)).

    >>> eulerian_gamma_count(3).gammas
    (1, 2)
    >>> eulerian_gamma_count(4).gammas
    (1, 8)
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    counts = [0] * ((n - 1) // 2 + 1)
    for sigma in permutations(range(1, n + 1)):
        prev_desc = False
        ok = True
        des = 0
        for i in range(n - 1):
            if sigma[i] > sigma[i + 1]:
                if prev_desc or i == n - 2:
                    ok = False
                    break
                des += 1
                prev_desc = True
            else:
                prev_desc = False
        if ok:
            counts[des] += 1
    return GammaVector(counts, n - 1)


def poly_to_json_dict(p: IntPolynomial) -> dict:
    """JSON form with coefficients as decimal strings (bigint safe)."""
    return {"degree": p.degree, "coeffs": [str(c) for c in p.coeffs]}


def gamma_to_json_dict(g: GammaVector) -> dict:
    return {"degree": g.degree, "gammas": [str(c) for c in g.gammas]}


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()

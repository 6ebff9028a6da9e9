"""The quadratic character chi_D on F_p[T].

chi_D(f) is the Jacobi symbol (f/D): the character of f modulo D, which is 0
when gcd(f, D) != 1 and otherwise the product of Euler-criterion values of f
at the monic irreducible factors of D. Two independent evaluators live here:

  chi        reciprocity ladder, gcd-like, no factoring; the hot path
  chi_oracle factor D by trial division, then Euler's criterion per factor

plus chi_table, which tabulates chi_D on all monic polynomials up to a degree
bound by running the ladder on irreducibles only and extending by complete
multiplicativity through the factor sieve.
"""

from __future__ import annotations

from functools import lru_cache

from .finite_field import legendre_table
from .fp_poly import (
    FpPolynomial,
    _divmod,
    _mod_monic,
    _monic_tuple_by_index,
    _mul,
    factor_sieve,
    is_squarefree,
    poly_to_text,
)


@lru_cache(maxsize=256)
def _validate_modulus(p: int, d_coeffs: tuple) -> None:
    D = FpPolynomial(d_coeffs, p)
    if D.degree < 1:
        raise ValueError("character modulus must have degree >= 1")
    if not D.is_monic:
        raise ValueError("character modulus must be monic")
    if not is_squarefree(D):
        raise ValueError("character modulus must be squarefree")


def _chi_ladder(f: tuple, g: tuple, p: int, leg: tuple) -> int:
    """(f/g) for monic g with deg g >= 1, by reciprocity.

    Rules used, for monic coprime f, g and scalar a != 0:
      (a*f/g) = legendre(a)^(deg g) * (f/g)
      (f/g)   = (-1)^(((p-1)/2) * deg f * deg g) * (g/f)
      (f/g)   = (f mod g / g);  (c/g) = legendre(c)^(deg g);  shared factor -> 0
    """
    s = 1
    flip = (p & 3) == 3  # (p-1)/2 odd
    while True:
        f = _mod_monic(f, g, p)
        if not f:
            return 0  # deg g >= 1 throughout the loop, so a true common factor
        lc = f[-1]
        dg = len(g) - 1
        if lc != 1:
            if (dg & 1) and leg[lc] < 0:
                s = -s
            inv = pow(lc, p - 2, p)
            f = tuple(c * inv % p for c in f)
        df = len(f) - 1
        if df == 0:
            return s
        if flip and (df & 1) and (dg & 1):
            s = -s
        f, g = g, f


def chi(D: FpPolynomial, f: FpPolynomial) -> int:
    """The quadratic character of f modulo D, in {-1, 0, 1}.

    D must be monic, squarefree, of degree >= 1; f is arbitrary.
    """
    if D.p != f.p:
        raise ValueError("modulus mismatch: %d vs %d" % (D.p, f.p))
    _validate_modulus(D.p, D.coeffs)
    return _chi_ladder(f.coeffs, D.coeffs, D.p, legendre_table(D.p))


@lru_cache(maxsize=512)
def _factorize_monic(p: int, coeffs: tuple) -> tuple:
    """Monic irreducible factors (with multiplicity) by trial division,
    smallest degree first. Returns a tuple of coefficient tuples."""
    rem = coeffs
    out = []
    d = 1
    while len(rem) - 1 >= 2 * d:
        k = 0
        while k < p**d:
            g = _monic_tuple_by_index(p, d, k)
            if not _mod_monic(rem, g, p):
                out.append(g)
                rem, r = _divmod(rem, g, p)
                if r:
                    raise AssertionError("non-exact division in factorization")
                continue  # same g may divide again (multiplicity)
            k += 1
        d += 1
    if len(rem) - 1 >= 1:
        out.append(rem)
    return tuple(sorted(out, key=lambda t: (len(t), t)))


def _euler_symbol(f: tuple, P: tuple, p: int) -> int:
    """f^((|P|-1)/2) mod P for irreducible P, read off as 0 or +-1."""
    e = (p ** (len(P) - 1) - 1) // 2
    base = _mod_monic(f, P, p)
    if not base:
        return 0
    acc = (1,)
    while e:
        if e & 1:
            acc = _mod_monic(_mul(acc, base, p), P, p)
        base = _mod_monic(_mul(base, base, p), P, p)
        e >>= 1
    if acc == (1,):
        return 1
    if acc == (p - 1,):
        return -1
    raise ArithmeticError(
        "Euler criterion did not land on a sign; %r is not irreducible mod %d"
        % (P, p)
    )


def chi_oracle(D: FpPolynomial, f: FpPolynomial) -> int:
    """Independent evaluation of chi by factoring D and applying Euler's
    criterion at each irreducible factor. Slow; exists to cross-check chi."""
    if D.p != f.p:
        raise ValueError("modulus mismatch: %d vs %d" % (D.p, f.p))
    _validate_modulus(D.p, D.coeffs)
    val = 1
    for P in _factorize_monic(D.p, D.coeffs):
        s = _euler_symbol(f.coeffs, P, D.p)
        if s == 0:
            return 0
        val *= s
    return val


@lru_cache(maxsize=8)
def _chi_table_cached(p: int, d_coeffs: tuple, maxdeg: int) -> tuple:
    leg = legendre_table(p)
    sieve = factor_sieve(p, maxdeg)
    table = [None] * (maxdeg + 1)
    table[0] = (1,)
    for n in range(1, maxdeg + 1):
        row = [0] * (p**n)
        split = sieve.split[n]
        for k in sieve.irreducible_indices[n]:
            row[k] = _chi_ladder(_monic_tuple_by_index(p, n, k), d_coeffs, p, leg)
        for k in range(p**n):
            s = split[k]
            if s is not None:
                row[k] = table[s[0]][s[1]] * table[s[2]][s[3]]
        table[n] = tuple(row)
    return tuple(table)


def chi_table(D: FpPolynomial, maxdeg: int) -> tuple:
    """chi_D on every monic polynomial of degree 0..maxdeg.

    Returns a tuple of rows; row n is indexed by the enumerate_monic index.
    The ladder runs only on irreducibles, everything else follows by complete
    multiplicativity (chi is a character). Values agree with chi pointwise;
    tests enforce this on exhaustive grids.
    """
    _validate_modulus(D.p, D.coeffs)
    if maxdeg < 0:
        raise ValueError("maxdeg must be >= 0")
    if maxdeg == 0:
        return ((1,),)
    return _chi_table_cached(D.p, D.coeffs, maxdeg)


def character_summary(D: FpPolynomial) -> str:
    return "chi_%s over F_%d" % (poly_to_text(D), D.p)

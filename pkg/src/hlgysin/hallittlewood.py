"""Hall-Littlewood polynomials, Schur S and P specializations, straightening.

The central objects are symmetric polynomials attached to a sequence
lam = (lam_1, ..., lam_n) of nonnegative integers:

    R_lam(x; t) = sum over w in S_n of
                  w( x^lam * prod_{i<j} (x_i - t x_j) / (x_i - x_j) )

and the normalized class P_lam = R_lam / v_lam(t), where v_lam(t) is the
product of t-factorials of the value multiplicities of lam.  Every rational
sum is evaluated exactly: terms are cleared against the full Vandermonde,
summed, and divided once at the end, so a failed exactness assumption
surfaces as NotDivisibleError instead of a silent approximation.

At t = 0 the P-classes of partitions become Schur polynomials and at
t = -1 the P-classes of strict partitions become Schur P-polynomials; both
specializations are implemented independently (Jacobi-Trudi determinant,
hook sums and two-row recursion, closed coset formulas) so they can be
played against the Hall-Littlewood engine as cross-checks.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .antisym import (
    alternating_vandermonde_quotient,
    jacobi_symmetrizer,
    signed_permutation_sum,
)
from .polyring import NotDivisibleError, Polynomial, difference_product
from .symgroup import block_structure, coset_reps, ensure_within_bound


def as_int_sequence(seq):
    """Normalize to a tuple, checking entries are nonnegative integers."""
    seq = tuple(seq)
    for e in seq:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"sequence entries must be nonnegative integers: {seq!r}")
    return seq


def is_partition(seq):
    """Weakly decreasing sequence of nonnegative integers."""
    seq = as_int_sequence(seq)
    return all(a >= b for a, b in zip(seq, seq[1:]))


def is_strict_partition(seq):
    """Strictly decreasing sequence of positive integers (possibly empty)."""
    seq = as_int_sequence(seq)
    if any(e == 0 for e in seq):
        return False
    return all(a > b for a, b in zip(seq, seq[1:]))


# ---------------------------------------------------------------------- #
# t-factorials and Gaussian binomials (polynomials in t alone, arity 0)


@lru_cache(maxsize=None)
def t_factorial(m):
    """(1 + t)(1 + t + t^2) ... (1 + t + ... + t^(m-1)); equals m! at t = 1."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = Polynomial.one(0)
    for i in range(2, m + 1):
        out = out * Polynomial._raw(0, {(k,): 1 for k in range(i)})
    return out


def t_factorial_product(seq):
    """Product of t-factorials of the value multiplicities of a sequence."""
    seq = as_int_sequence(seq)
    out = Polynomial.one(0)
    for m in block_structure(seq).multiplicities if seq else ():
        out = out * t_factorial(m)
    return out


def gaussian_binomial(a, b):
    """Gaussian polynomial [a+b choose a] as t_factorial(a+b)/(t_factorial(a)*t_factorial(b))."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    return t_factorial(a + b).divide_exact(t_factorial(a) * t_factorial(b))


def gaussian_binomial_at_minus_one(a, b):
    """Value of the Gaussian polynomial at t = -1, from the closed form.

    Zero when a*b is odd, otherwise the ordinary binomial coefficient
    C(floor((a+b)/2), floor(a/2)).  Computed combinatorially, not by
    substitution, so it can serve as an independent oracle.
    """
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    if (a * b) % 2:
        return 0
    return math.comb((a + b) // 2, a // 2)


# ---------------------------------------------------------------------- #
# Hall-Littlewood classes


@lru_cache(maxsize=None)
def t_twisted_vandermonde(n):
    """prod_{i<j} (x_i - t x_j)."""
    out = Polynomial.one(n)
    t = Polynomial.t(n)
    for i, j in itertools.combinations(range(1, n + 1), 2):
        out = out * (Polynomial.x(n, i) - t * Polynomial.x(n, j))
    return out


def hall_littlewood_r(n, seq):
    """R_seq(x_1..x_n; t), the signed-symmetrization numerator class.

    Computed as the exact quotient of sum_w sign(w) w(x^seq * prod_{i<j}
    (x_i - t x_j)) by the Vandermonde determinant.
    """
    return _hall_littlewood_r(n, as_int_sequence(seq))


@lru_cache(maxsize=256)
def _hall_littlewood_r(n, seq):
    if n < 1 or len(seq) != n:
        raise ValueError(f"sequence of length {len(seq)} does not match n = {n}")
    ensure_within_bound(n)
    numerator_core = Polynomial.monomial(n, seq) * t_twisted_vandermonde(n)
    return jacobi_symmetrizer(numerator_core)


def hall_littlewood_r_coset(n, seq):
    """R_seq again, via the stabilizer-coset form of the symmetrization.

    v_seq(t) times the sum over the canonical transversal of S_n modulo the
    level-set stabilizer of

        w( x^seq * prod_{seq_i != seq_j} (x_i - t x_j) / (x_i - x_j) ),

    each term cleared against the full Vandermonde.  Must agree with
    hall_littlewood_r; disagreement (or a failed division) is a genuine
    finding about the sequence, not an artifact.
    """
    seq = as_int_sequence(seq)
    if n < 1 or len(seq) != n:
        raise ValueError(f"sequence of length {len(seq)} does not match n = {n}")
    ensure_within_bound(n)
    blocks = block_structure(seq)
    t = Polynomial.t(n)
    core = Polynomial.monomial(n, seq)
    for i, j in itertools.combinations(range(1, n + 1), 2):
        if seq[i - 1] != seq[j - 1]:
            core = core * (Polynomial.x(n, i) - t * Polynomial.x(n, j))
        else:
            core = core * (Polynomial.x(n, i) - Polynomial.x(n, j))
    numerator = signed_permutation_sum(core, coset_reps(blocks))
    quotient = alternating_vandermonde_quotient(numerator)
    return t_factorial_product(seq).embed(n) * quotient


def hall_littlewood_p(n, seq):
    """P_seq(x_1..x_n; t) = R_seq / v_seq(t), an exact division."""
    return _hall_littlewood_p(n, as_int_sequence(seq))


@lru_cache(maxsize=256)
def _hall_littlewood_p(n, seq):
    try:
        return _hall_littlewood_r(n, seq).divide_exact(
            t_factorial_product(seq).embed(n)
        )
    except NotDivisibleError:
        raise NotDivisibleError(
            f"normalizer does not divide the symmetrized class for {seq}; "
            "the normalized class is undefined for this sequence"
        ) from None


def hall_littlewood_p_specialized(n, seq, t_value):
    """P_seq with an integer substituted for t (0 gives Schur S, -1 Schur P)."""
    return hall_littlewood_p(n, seq).substitute_t(t_value)


# ---------------------------------------------------------------------- #
# Schur polynomials (the t = 0 shadow)


@lru_cache(maxsize=None)
def complete_homogeneous(degree, n):
    """h_degree(x_1..x_n): sum of all monomials of the given total degree."""
    if degree < 0:
        return Polynomial.zero(n)
    if degree == 0:
        return Polynomial.one(n)
    terms = {}
    for combo in itertools.combinations_with_replacement(range(n), degree):
        key = [0] * (n + 1)
        for idx in combo:
            key[idx] += 1
        terms[tuple(key)] = 1
    return Polynomial._raw(n, terms)


def _as_partition_of_length(seq, n):
    seq = as_int_sequence(seq)
    if not all(a >= b for a, b in zip(seq, seq[1:])):
        raise ValueError(f"not a partition: {seq!r}")
    if len(seq) > n:
        if any(seq[n:]):
            raise ValueError(
                f"partition {seq!r} has more than {n} nonzero parts"
            )
        seq = seq[:n]
    return seq + (0,) * (n - len(seq))


def schur_s(partition, n):
    """Schur polynomial via the Jacobi-Trudi determinant det(h_{lam_i - i + j})."""
    return _schur_s(_as_partition_of_length(partition, n), n)


@lru_cache(maxsize=None)
def _schur_s(lam, n):
    cache = {}

    def minor(rows):
        # Determinant of the submatrix on these rows and columns
        # n - len(rows) .. n - 1 (0-based), expanded along its first column.
        if not rows:
            return Polynomial.one(n)
        got = cache.get(rows)
        if got is not None:
            return got
        col = n - len(rows)
        out = Polynomial.zero(n)
        sign = 1
        for pos, row in enumerate(rows):
            entry = complete_homogeneous(lam[row] - row + col, n)
            if not entry.is_zero:
                sub = minor(rows[:pos] + rows[pos + 1:])
                out = out + sign * (entry * sub)
            sign = -sign
        cache[rows] = out
        return out

    return minor(tuple(range(n)))


def schur_s_bialternant(partition, n):
    """Schur polynomial as the one-row alternant quotient.

    antisymmetrize(x^(lam + delta)) / Vandermonde with delta = (n-1, ..., 0);
    an independent route that must match the Jacobi-Trudi determinant.
    """
    lam = _as_partition_of_length(partition, n)
    ensure_within_bound(n)
    staircase = tuple(lam[i] + n - 1 - i for i in range(n))
    return jacobi_symmetrizer(Polynomial.monomial(n, staircase))


def straighten_schur_s(seq):
    """Normalize an exponent sequence for the Schur alternant.

    Repeatedly replaces an adjacent out-of-order pair (..., a, b, ...) with
    (..., b - 1, a + 1, ...), flipping the sign each time.  Returns None when
    a pattern (a, a + 1) appears (the alternant vanishes), otherwise
    (sign, partition).
    """
    seq = list(as_int_sequence(seq))
    sign = 1
    while True:
        for pos in range(len(seq) - 1):
            a, b = seq[pos], seq[pos + 1]
            if a < b:
                if b == a + 1:
                    return None
                seq[pos], seq[pos + 1] = b - 1, a + 1
                sign = -sign
                break
        else:
            return sign, tuple(seq)


# ---------------------------------------------------------------------- #
# Schur P polynomials (the t = -1 shadow)


def schur_p_coset(nu, n):
    """Schur P-polynomial of a strict partition, by the closed coset formula.

    P_nu(x_1..x_n) = sum over cosets of S_1^k x S_{n-k} of
    w( x^nu * prod_{i<=k, i<j<=n} (x_i + x_j) / (x_i - x_j) ), cleared
    against the full Vandermonde.
    """
    nu = as_int_sequence(nu)
    if not is_strict_partition(nu):
        raise ValueError(f"not a strict partition: {nu!r}")
    return _schur_p_coset(nu, n)


@lru_cache(maxsize=None)
def _schur_p_coset(nu, n):
    k = len(nu)
    if k > n:
        raise ValueError(f"strict partition {nu!r} needs more than {n} variables")
    ensure_within_bound(n)
    lam = nu + (0,) * (n - k)
    core = Polynomial.monomial(n, lam)
    for i in range(1, k + 1):
        for j in range(i + 1, n + 1):
            core = core * (Polynomial.x(n, i) + Polynomial.x(n, j))
    core = core * difference_product(
        n, itertools.combinations(range(k + 1, n + 1), 2)
    )
    numerator = signed_permutation_sum(core, coset_reps(block_structure(lam)))
    return alternating_vandermonde_quotient(numerator)


def schur_p_recursive(nu, n):
    """Schur P-polynomial by hook sums and the two-row recursion.

    One-row: P_m = sum of Schur polynomials of the hooks (m - j, 1^j).
    Two-row: P_{i,j} = P_i P_j + 2 * sum_{d=1}^{j-1} (-1)^d P_{i+d} P_{j-d}
    + (-1)^j P_{i+j}.  Longer strict partitions expand along the first row
    (odd length) or into two-row minors (even length).
    """
    nu = as_int_sequence(nu)
    if not is_strict_partition(nu):
        raise ValueError(f"not a strict partition: {nu!r}")
    if len(nu) > n:
        raise ValueError(f"strict partition {nu!r} needs more than {n} variables")
    return _schur_p_rec(nu, n)


@lru_cache(maxsize=None)
def _schur_p_one_row(m, n):
    if m == 0:
        return Polynomial.one(n)
    out = Polynomial.zero(n)
    for j in range(m):
        if j + 1 > n:
            break  # hooks with more rows than variables vanish
        hook = (m - j,) + (1,) * j
        out = out + schur_s(hook, n)
    return out


@lru_cache(maxsize=None)
def _schur_p_two_rows(i, j, n):
    out = _schur_p_one_row(i, n) * _schur_p_one_row(j, n)
    for d in range(1, j):
        term = _schur_p_one_row(i + d, n) * _schur_p_one_row(j - d, n)
        out = out + (2 if d % 2 == 0 else -2) * term
    out = out + (1 if j % 2 == 0 else -1) * _schur_p_one_row(i + j, n)
    return out


@lru_cache(maxsize=None)
def _schur_p_rec(nu, n):
    k = len(nu)
    if k == 0:
        return Polynomial.one(n)
    if k == 1:
        return _schur_p_one_row(nu[0], n)
    if k == 2:
        return _schur_p_two_rows(nu[0], nu[1], n)
    out = Polynomial.zero(n)
    if k % 2:
        for a in range(k):
            rest = nu[:a] + nu[a + 1:]
            term = _schur_p_one_row(nu[a], n) * _schur_p_rec(rest, n)
            out = out + (term if a % 2 == 0 else -term)
    else:
        for b in range(1, k):
            rest = nu[1:b] + nu[b + 1:]
            term = _schur_p_two_rows(nu[0], nu[b], n) * _schur_p_rec(rest, n)
            out = out + (term if b % 2 else -term)
    return out


def straighten_schur_p(seq):
    """Sort a sequence of distinct positive parts, tracking the sign.

    Returns None when two parts coincide (the P-class vanishes), otherwise
    ((-1)^inversions, sorted_decreasing).  Zero entries must be stripped by
    the caller.
    """
    seq = tuple(seq)
    for e in seq:
        if not isinstance(e, int) or isinstance(e, bool) or e <= 0:
            raise ValueError(f"parts must be positive integers: {seq!r}")
    if len(set(seq)) < len(seq):
        return None
    inversions = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] < seq[b]:
                inversions += 1
    return (-1 if inversions & 1 else 1), tuple(sorted(seq, reverse=True))

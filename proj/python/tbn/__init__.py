"""Braid groups B_n, the quotient B~_n and its normal form through G(n).

Words are lists of nonzero ints (k for X_k, -k for its inverse).
Elements of G(n) are (bit, [v0, ..., v{n-1}]) tuples.
"""

from ._tbn import (
    InputError,
    act,
    bn_equal,
    canonical_prime,
    classify,
    format_element,
    format_word,
    in_kernel,
    inverse,
    lambda_,
    lift,
    linking_matrix,
    multiply,
    normal_form,
    nu,
    orbit_check,
    parse_element,
    parse_word,
    permutation,
    prime_check,
    s_ij,
    tbn_equal,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]

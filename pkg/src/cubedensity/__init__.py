"""Integers n for which x -> x^3 permutes Z/nZ, and the congruence-restricted
families I_m(A): membership, exact sieve counts and asymptotic constants."""
from .arith import (Q, V, W, CongruenceSelector, FactoredInteger, euler_totient, factorize,
                    is_member, is_squarefree, legendre, power_map_is_bijection)
from .kernels import BACKEND
from .sieve import CountTable, count_members, count_smooth, degenerate_asymptotic, enumerate_members

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CongruenceSelector", "CountTable", "FactoredInteger", "Q", "V", "W",
    "count_members", "count_smooth", "degenerate_asymptotic", "enumerate_members",
    "euler_totient", "factorize", "is_member", "is_squarefree", "legendre",
    "power_map_is_bijection",
]

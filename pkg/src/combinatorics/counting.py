"""
Closed formulas for simultaneous core partitions and the paths that encode them.

Every value is an exact Python integer. Divisions go through exact_div, which
raises InexactDivisionError on a nonzero remainder instead of rounding.
"""

import logging
from math import comb, gcd
from typing import Any, Callable, Dict, Tuple

from src.combinatorics.oracle import count_oracle
from src.combinatorics.paths import gen_dyck_count_recurrence
from src.models.errors import InexactDivisionError, ParameterError
from src.models.results import CountResult, FormulaId

logger = logging.getLogger("Counting")


def binomial(n: int, k: int) -> int:
    """C(n, k), zero whenever k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(n: int, a: int, b: int, c: int) -> int:
    """n! / (a! b! c!) when a + b + c = n and all entries are nonnegative, else 0."""
    if min(n, a, b, c) < 0 or a + b + c != n:
        return 0
    return comb(n, a) * comb(n - a, b)


def exact_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        logger.error(f"Inexact division {numerator} / {denominator} (remainder {remainder})")
        raise InexactDivisionError(f"{numerator} is not divisible by {denominator}")
    return quotient


def _check_coprime(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise ParameterError(f"arguments must be positive, got {a} and {b}")
    if gcd(a, b) != 1:
        raise ParameterError(f"arguments must be relatively prime, got {a} and {b}")


def _check_p(p: int) -> None:
    if p < 2:
        raise ParameterError(f"p must be at least 2, got {p}")


def _ell_cap(s: int, k: int, p: int) -> int:
    # p = 2 forbids no pattern, so every l up to k-1 contributes
    if p == 2:
        return k - 1
    return min(k - 1, (s - 2 * k) // (p - 2))


def catalan(n: int) -> int:
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    return exact_div(binomial(2 * n, n), n + 1)


def motzkin_number(n: int) -> int:
    """M_n as the sum over k of C(n, 2k) * Catalan(k)."""
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    return sum(binomial(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


def motzkin_recurrence(n: int) -> int:
    """
    M_n from (n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2}, M_0 = M_1 = 1.

    Kept independent of the binomial formulas so the two can be compared.
    """
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    previous, current = 1, 1
    for m in range(2, n + 1):
        previous, current = current, exact_div((2 * m + 1) * current + 3 * (m - 1) * previous, m + 2)
    return current


def narayana(k: int, m: int) -> int:
    """N(k, m) = C(k, m) C(k, m-1) / k; zero outside 1 <= m <= k."""
    if not 1 <= m <= k:
        return 0
    return exact_div(binomial(k, m) * binomial(k, m - 1), k)


def narayana_alt(k: int, m: int) -> int:
    if not 1 <= m <= k:
        return 0
    return exact_div(binomial(k + 1, m) * binomial(k - 1, m - 1), k + 1)


def count_anderson(s: int, t: int) -> int:
    """Number of (s, t)-cores: C(s+t, s) / (s+t)."""
    _check_coprime(s, t)
    return exact_div(binomial(s + t, s), s + t)


def count_wang(s: int, d: int) -> int:
    """Number of (s, s+d, s+2d)-cores."""
    _check_coprime(s, d)
    total = sum(multinomial(s + d, k, k + d, s - 2 * k) for k in range(s // 2 + 1))
    return exact_div(total, s + d)


def count_bny(s: int, d: int) -> int:
    """Number of (s, s+d, s+2d, s+3d)-cores."""
    _check_coprime(s, d)
    n = s + d
    total = sum(
        (binomial(n - k, k) + binomial(n - k - 1, k - 1)) * binomial(n - k, s - 2 * k)
        for k in range(s // 2 + 1)
    )
    return exact_div(total, n)


def count_mainprop(s: int, d: int, p: int, k: int) -> int:
    """
    Rational Motzkin paths of type (s+d, -d) with k up steps and no U F^i U, i <= p-3.

    Args:
        s: First modulus
        d: Common difference, coprime to s
        p: Number of core conditions beyond s, at least 2
        k: Number of up steps, at least 1

    Returns:
        The count; zero when 2k > s
    """
    _check_coprime(s, d)
    _check_p(p)
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")
    if 2 * k > s:
        return 0
    total = sum(
        binomial(k + d, k - ell) * binomial(k - 1, ell) * binomial(s + d - ell * (p - 2) - 1, 2 * k + d - 1)
        for ell in range(_ell_cap(s, k, p) + 1)
    )
    return exact_div(total, k + d)


def count_main(s: int, d: int, p: int) -> int:
    """
    Number of (s, s+d, ..., s+pd)-core partitions.

    The k = 0 term C(s+d, d)/(s+d) counts the paths without up steps; each
    k >= 1 term is count_mainprop(s, d, p, k).
    """
    _check_coprime(s, d)
    _check_p(p)
    flat_only = exact_div(binomial(s + d, d), s + d)
    return flat_only + sum(count_mainprop(s, d, p, k) for k in range(1, s // 2 + 1))


def count_free_paths(s: int, d: int, k: int) -> int:
    """Free rational Motzkin words of type (s+d, -d) with k up steps."""
    if k < 0:
        raise ParameterError(f"k must be nonnegative, got {k}")
    return multinomial(s + d, k, k + d, s - 2 * k)


def count_freemotz(s: int, d: int, k: int) -> int:
    """Rational Motzkin paths of type (s+d, -d) with k up steps."""
    _check_coprime(s, d)
    return exact_div(count_free_paths(s, d, k), s + d)


def count_corone(s: int, p: int) -> int:
    """Number of (s, s+1, ..., s+p)-cores via Narayana numbers."""
    _check_p(p)
    if s < 0:
        raise ParameterError(f"s must be nonnegative, got {s}")
    return 1 + sum(count_corners(s, p, k) for k in range(1, s // 2 + 1))


def count_corners(s: int, p: int, k: int) -> int:
    """(s, s+1, ..., s+p)-cores with exactly k corners; k = 0 counts the empty partition."""
    _check_p(p)
    if k < 0:
        raise ParameterError(f"k must be nonnegative, got {k}")
    if k == 0:
        return 1
    return sum(
        narayana(k, ell + 1) * binomial(s - ell * (p - 2), 2 * k)
        for ell in range(max(_ell_cap(s, k, p), -1) + 1)
    )


def count_corners_two(s: int, k: int) -> int:
    """(s, s+1)-cores with k corners: N(s, k+1)."""
    if s == 0 and k == 0:
        return 1
    return narayana(s, k + 1)


def count_corners_motzkin(s: int, k: int) -> int:
    """(s, s+1, s+2)-cores with k corners: C(s, 2k) Catalan(k)."""
    if k < 0:
        return 0
    return binomial(s, 2 * k) * catalan(k)


def count_sc_fms(s: int, t: int) -> int:
    """Self-conjugate (s, t)-cores."""
    _check_coprime(s, t)
    return binomial(s // 2 + t // 2, s // 2)


def count_sym_dyck(k: int, ell: int) -> int:
    """Symmetric Dyck paths of order k with ell UU factors; zero outside 0 <= ell < k."""
    if not 0 <= ell < k:
        return 0
    return binomial((k - 1) // 2, ell // 2) * binomial(k // 2, (ell + 1) // 2)


def count_sc_main(s: int, p: int) -> int:
    """Self-conjugate (s, s+1, ..., s+p)-cores."""
    _check_p(p)
    if s < 0:
        raise ParameterError(f"s must be nonnegative, got {s}")
    total = 1
    for k in range(1, s // 2 + 1):
        for ell in range(_ell_cap(s, k, p) + 1):
            total += count_sym_dyck(k, ell) * binomial((s - ell * (p - 2)) // 2, k)
    return total


def count_gen_dyck(s: int, p: int) -> int:
    return gen_dyck_count_recurrence(s, p)


def count_oracle_family(moduli: Tuple[int, ...], self_conjugate: bool = False) -> int:
    return count_oracle(list(moduli), self_conjugate=self_conjugate)


_FORMULAS: Dict[FormulaId, Tuple[Callable[..., int], Tuple[str, ...]]] = {
    FormulaId.ANDERSON: (count_anderson, ("s", "t")),
    FormulaId.WANG: (count_wang, ("s", "d")),
    FormulaId.BNY: (count_bny, ("s", "d")),
    FormulaId.MAIN: (count_main, ("s", "d", "p")),
    FormulaId.MAINPROP: (count_mainprop, ("s", "d", "p", "k")),
    FormulaId.FREEMOTZ: (count_freemotz, ("s", "d", "k")),
    FormulaId.FREE_PATHS: (count_free_paths, ("s", "d", "k")),
    FormulaId.CORONE: (count_corone, ("s", "p")),
    FormulaId.GEN_DYCK: (count_gen_dyck, ("s", "p")),
    FormulaId.NARAYANA: (narayana, ("k", "m")),
    FormulaId.CORNERS: (count_corners, ("s", "p", "k")),
    FormulaId.CORNERS_TWO: (count_corners_two, ("s", "k")),
    FormulaId.CORNERS_MOTZKIN: (count_corners_motzkin, ("s", "k")),
    FormulaId.SC_FMS: (count_sc_fms, ("s", "t")),
    FormulaId.SYM_DYCK: (count_sym_dyck, ("k", "ell")),
    FormulaId.SC_MAIN: (count_sc_main, ("s", "p")),
    FormulaId.CATALAN: (catalan, ("n",)),
    FormulaId.MOTZKIN: (motzkin_number, ("n",)),
    FormulaId.ORACLE: (count_oracle_family, ("moduli", "self_conjugate")),
}


def formula_parameters(formula_id: FormulaId) -> Tuple[str, ...]:
    """Names of the arguments a formula reads, in call order."""
    return _FORMULAS[FormulaId(formula_id)][1]


def evaluate(formula_id: FormulaId, **params: Any) -> CountResult:
    """
    Evaluate a formula by id, reading only the parameters it needs.

    Args:
        formula_id: Which formula to evaluate
        **params: Named inputs; extra names are ignored

    Returns:
        The count with the parameters actually used echoed back

    Raises:
        ParameterError: A required parameter is missing or violates a precondition
    """
    formula_id = FormulaId(formula_id)
    function, names = _FORMULAS[formula_id]
    if formula_id is FormulaId.ORACLE:
        params.setdefault("self_conjugate", False)
    missing = [name for name in names if params.get(name) is None]
    if missing:
        raise ParameterError(f"formula '{formula_id.value}' needs {', '.join(missing)}")
    used = {name: params[name] for name in names}
    value = function(*used.values())
    logger.debug(f"{formula_id.value}{tuple(used.values())} = {value}")
    if formula_id is FormulaId.ORACLE:
        used["moduli"] = list(used["moduli"])
    return CountResult(value=value, parameters=used, formula_id=formula_id)

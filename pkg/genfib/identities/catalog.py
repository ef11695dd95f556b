"""Registry of Fibonacci/Lucas identities, each with its printed form and, where
the printed form fails, a corrected one (static, or fitted by the solver).

Symbols: n, m, i, j, alpha. Index ranges default to the sweep grid in
genfib.config; entries narrow them where the statement needs it.
"""

from __future__ import annotations

from fractions import Fraction

from genfib import config
from genfib.identities.base import F, L, Identity, Statement, sgn
from genfib.identities.correction import linear_ansatz, quadratic_ansatz

N = config.SWEEP_N_RANGE
SMALL = config.SMALL_INDEX_RANGE
ALPHA = config.ALPHA_RANGE
M = config.M_RANGE
CLASSICAL = config.CLASSICAL_K_RANGE


def _positive_n(b) -> bool:
    return b["n"] >= 1


# --- Shifted products ---

def _shifted_fib(p, b):
    a, n, i, j = b["alpha"], b["n"], b["i"], b["j"]
    return F(p, a + n + i) * F(p, a + n + j) - sgn(a + i + j) * F(p, n - i) * F(p, n - j)


def _shifted_lucas_printed(p, b):
    a, n, i, j = b["alpha"], b["n"], b["i"], b["j"]
    return L(p, a + n + i) * L(p, a + n + j) - sgn(a + i + j) * p.D * L(p, n - i) * L(p, n - j)


def _shifted_lucas_corrected(p, b):
    a, n, i, j = b["alpha"], b["n"], b["i"], b["j"]
    return L(p, a + n + i) * L(p, a + n + j) + sgn(a + i + j) * p.D * F(p, n - i) * F(p, n - j)


SHIFTED = {"alpha": ALPHA, "n": N, "i": SMALL, "j": SMALL}
VAJDA = {"n": N, "i": SMALL, "j": SMALL}


# --- Sums ---

def _sum_squares(p, n):
    return sum(F(p, j) ** 2 for j in range(1, n + 1))


def _reciprocal_rhs(p, b):
    n = b["n"]
    return Fraction(p.k + 2, p.k) - Fraction(F(p, 2**n - 1), F(p, 2**n))


# --- Carlitz cubes ---

def _carlitz(Z, weight):
    def lhs(p, b):
        n, w = b["n"], weight(p)
        return Fraction(Z(p, n + 1)) ** 3 - w**3 * Z(p, n) ** 3 - Z(p, n - 1) ** 3

    def rhs(p, b):
        n, w = b["n"], weight(p)
        return 3 * w * Z(p, n + 1) * Z(p, n) * Z(p, n - 1)

    return lhs, rhs


def _half_k(p):
    return Fraction(p.k, 2)


def _k(p):
    return Fraction(p.k)


_carlitz_f_printed = _carlitz(F, _half_k)
_carlitz_f = _carlitz(F, _k)
_carlitz_l_printed = _carlitz(L, _half_k)
_carlitz_l = _carlitz(L, _k)


# --- Products of differences ---

def _pd1_square(p, b):
    n = b["n"]
    return F(p, n + 1) * F(p, n + 2) * F(p, n + 6) - F(p, n + 3) ** 2


def _pd1_cube(p, b):
    n = b["n"]
    return F(p, n + 1) * F(p, n + 2) * F(p, n + 6) - F(p, n + 3) ** 3


def _pd2_printed(p, b):
    n = b["n"]
    return F(p, n) * F(p, n + 4) * F(p, n + 5) - F(p, n + 1) ** 3


def _pd2_cube(p, b):
    n = b["n"]
    return F(p, n) * F(p, n + 4) * F(p, n + 5) - F(p, n + 3) ** 3


def _pd3(p, b):
    n = b["n"]
    return F(p, n - 2) * F(p, n + 1) ** 2 - F(p, n) ** 3


def _pd4(p, b):
    n = b["n"]
    return F(p, n + 2) * F(p, n - 1) ** 2 - F(p, n) ** 3


def _pd5(p, b):
    n = b["n"]
    return F(p, n - 3) * F(p, n + 1) ** 3 - F(p, n) ** 4


def _pd6(p, b):
    n = b["n"]
    return F(p, n + 3) * F(p, n - 1) ** 3 - F(p, n) ** 4


IDENTITIES: list[Identity] = [
    Identity(
        id="shifted-products-fib",
        source="shifted products, Fibonacci form",
        symbols=("alpha", "n", "i", "j"),
        printed=Statement(
            "F_{a+n+i}F_{a+n+j} - (-1)^{a+i+j}F_{n-i}F_{n-j} = F_{a+2n}F_{a+i+j}",
            _shifted_fib,
            lambda p, b: F(p, b["alpha"] + 2 * b["n"]) * F(p, b["alpha"] + b["i"] + b["j"]),
        ),
        ranges=SHIFTED,
    ),
    Identity(
        id="vajda-fib",
        source="shifted products, Vajda form",
        symbols=("n", "i", "j"),
        printed=Statement(
            "F_{n+i}F_{n+j} - F_nF_{n+i+j} = (-1)^n F_iF_j",
            lambda p, b: F(p, b["n"] + b["i"]) * F(p, b["n"] + b["j"]) - F(p, b["n"]) * F(p, b["n"] + b["i"] + b["j"]),
            lambda p, b: sgn(b["n"]) * F(p, b["i"]) * F(p, b["j"]),
        ),
        ranges=VAJDA,
    ),
    Identity(
        id="shifted-products-lucas",
        source="shifted products, Lucas companion",
        symbols=("alpha", "n", "i", "j"),
        printed=Statement(
            "L_{a+n+i}L_{a+n+j} - (-1)^{a+i+j}(k^2+4)L_{n-i}L_{n-j} = L_{a+2n}L_{a+i+j}",
            _shifted_lucas_printed,
            lambda p, b: L(p, b["alpha"] + 2 * b["n"]) * L(p, b["alpha"] + b["i"] + b["j"]),
        ),
        corrected=Statement(
            "L_{a+n+i}L_{a+n+j} + (-1)^{a+i+j}(k^2+4)F_{n-i}F_{n-j} = L_{a+2n}L_{a+i+j}",
            _shifted_lucas_corrected,
            lambda p, b: L(p, b["alpha"] + 2 * b["n"]) * L(p, b["alpha"] + b["i"] + b["j"]),
        ),
        ranges=SHIFTED,
    ),
    Identity(
        id="vajda-lucas",
        source="shifted products, Lucas Vajda form",
        symbols=("n", "i", "j"),
        printed=Statement(
            "L_{n+i}L_{n+j} - L_nL_{n+i+j} = (-1)^{n+1}(k^2+4)F_iF_j",
            lambda p, b: L(p, b["n"] + b["i"]) * L(p, b["n"] + b["j"]) - L(p, b["n"]) * L(p, b["n"] + b["i"] + b["j"]),
            lambda p, b: sgn(b["n"] + 1) * p.D * F(p, b["i"]) * F(p, b["j"]),
        ),
        ranges=VAJDA,
    ),
    Identity(
        id="owings-congruence",
        source="congruence pair from the Vajda form",
        symbols=("n",),
        printed=Statement(
            "F_{2n+1}^2 + k^2 = 0 (mod F_{2n-1}) and F_{2n-1}^2 + k^2 = 0 (mod F_{2n+1}); "
            "LHS is the sum of both residues",
            lambda p, b: (F(p, 2 * b["n"] + 1) ** 2 + p.k**2) % F(p, 2 * b["n"] - 1)
            + (F(p, 2 * b["n"] - 1) ** 2 + p.k**2) % F(p, 2 * b["n"] + 1),
            lambda p, b: 0,
        ),
        ranges={"n": N},
        valid=_positive_n,
    ),
    Identity(
        id="catalan",
        source="Catalan",
        symbols=("n", "m"),
        printed=Statement(
            "F_{n+m}F_{n-m} - F_n^2 = (-1)^{n+m+1}F_m^2",
            lambda p, b: F(p, b["n"] + b["m"]) * F(p, b["n"] - b["m"]) - F(p, b["n"]) ** 2,
            lambda p, b: sgn(b["n"] + b["m"] + 1) * F(p, b["m"]) ** 2,
        ),
        ranges={"n": N, "m": M},
    ),
    Identity(
        id="cassini",
        source="Cassini",
        symbols=("n",),
        printed=Statement(
            "F_{n+1}F_{n-1} - F_n^2 = (-1)^n",
            lambda p, b: F(p, b["n"] + 1) * F(p, b["n"] - 1) - F(p, b["n"]) ** 2,
            lambda p, b: sgn(b["n"]),
        ),
        ranges={"n": N},
    ),
    Identity(
        id="sum-squares",
        source="sum of squares",
        symbols=("n",),
        printed=Statement(
            "sum_{j=1}^{n} F_j^2 = k F_nF_{n+1}",
            lambda p, b: _sum_squares(p, b["n"]),
            lambda p, b: p.k * F(p, b["n"]) * F(p, b["n"] + 1),
        ),
        corrected=Statement(
            "k sum_{j=1}^{n} F_j^2 = F_nF_{n+1}",
            lambda p, b: p.k * _sum_squares(p, b["n"]),
            lambda p, b: F(p, b["n"]) * F(p, b["n"] + 1),
        ),
        ranges={"n": N},
        valid=_positive_n,
    ),
    Identity(
        id="sum-adjacent-squares",
        source="sum of adjacent squares",
        symbols=("n",),
        printed=Statement(
            "F_{n+1}^2 + F_n^2 = F_{2n+1}",
            lambda p, b: F(p, b["n"] + 1) ** 2 + F(p, b["n"]) ** 2,
            lambda p, b: F(p, 2 * b["n"] + 1),
        ),
        ranges={"n": N},
    ),
    Identity(
        id="diff-squares",
        source="difference of squares",
        symbols=("n",),
        printed=Statement(
            "F_{n+1}^2 - F_n^2 = k F_{2n+1}",
            lambda p, b: F(p, b["n"] + 1) ** 2 - F(p, b["n"]) ** 2,
            lambda p, b: p.k * F(p, 2 * b["n"] + 1),
        ),
        corrected=Statement(
            "F_{n+1}^2 - F_{n-1}^2 = k F_{2n}",
            lambda p, b: F(p, b["n"] + 1) ** 2 - F(p, b["n"] - 1) ** 2,
            lambda p, b: p.k * F(p, 2 * b["n"]),
        ),
        ranges={"n": N},
    ),
    Identity(
        id="lucas-from-fib",
        source="Lucas from Fibonacci",
        symbols=("n",),
        printed=Statement(
            "L_n = F_{n+1} + F_{n-1}",
            lambda p, b: L(p, b["n"]),
            lambda p, b: F(p, b["n"] + 1) + F(p, b["n"] - 1),
        ),
        ranges={"n": N},
    ),
    Identity(
        id="lucas-neighbours",
        source="Vajda, Lucas neighbours",
        symbols=("n",),
        printed=Statement(
            "L_{n+1} + L_{n-1} = (k^2+4) F_n",
            lambda p, b: L(p, b["n"] + 1) + L(p, b["n"] - 1),
            lambda p, b: p.D * F(p, b["n"]),
        ),
        ranges={"n": N},
    ),
    Identity(
        id="fib-gap-lucas",
        source="Vajda, index gap",
        symbols=("n",),
        printed=Statement(
            "F_{n+2} - L_{n-2} = k L_n",
            lambda p, b: F(p, b["n"] + 2) - L(p, b["n"] - 2),
            lambda p, b: p.k * L(p, b["n"]),
        ),
        corrected=Statement(
            "F_{n+2} - F_{n-2} = k L_n",
            lambda p, b: F(p, b["n"] + 2) - F(p, b["n"] - 2),
            lambda p, b: p.k * L(p, b["n"]),
        ),
        ranges={"n": N},
    ),
    Identity(
        id="lucas-fib-product",
        source="Lucas times Fibonacci",
        symbols=("m", "n"),
        printed=Statement(
            "L_mF_n - F_{m+n} = (-1)^m L_{n-m}",
            lambda p, b: L(p, b["m"]) * F(p, b["n"]) - F(p, b["m"] + b["n"]),
            lambda p, b: sgn(b["m"]) * L(p, b["n"] - b["m"]),
        ),
        corrected=Statement(
            "L_mF_n - F_{m+n} = (-1)^m F_{n-m}",
            lambda p, b: L(p, b["m"]) * F(p, b["n"]) - F(p, b["m"] + b["n"]),
            lambda p, b: sgn(b["m"]) * F(p, b["n"] - b["m"]),
        ),
        ranges={"m": M, "n": N},
    ),
    Identity(
        id="double-index",
        source="index doubling",
        symbols=("n",),
        printed=Statement(
            "F_{2n} = F_nL_n",
            lambda p, b: F(p, 2 * b["n"]),
            lambda p, b: F(p, b["n"]) * L(p, b["n"]),
        ),
        ranges={"n": N},
    ),
    Identity(
        id="fib-lucas-sum",
        source="index addition",
        symbols=("n", "m"),
        printed=Statement(
            "F_{n+m} + (-1)^m F_{n-m} = F_nL_m",
            lambda p, b: F(p, b["n"] + b["m"]) + sgn(b["m"]) * F(p, b["n"] - b["m"]),
            lambda p, b: F(p, b["n"]) * L(p, b["m"]),
        ),
        ranges={"n": N, "m": M},
    ),
    Identity(
        id="reciprocal-telescoping",
        source="telescoping reciprocal sum",
        symbols=("n",),
        printed=Statement(
            "sum_{j=0}^{n} 1/F_j = (k+2)/k - F_{2^n-1}/F_{2^n} (j = 0 term undefined; summed from j = 1)",
            lambda p, b: sum((Fraction(1, F(p, j)) for j in range(1, b["n"] + 1)), Fraction(0)),
            _reciprocal_rhs,
        ),
        corrected=Statement(
            "sum_{j=0}^{n} 1/F_{2^j} = (k+2)/k - F_{2^n-1}/F_{2^n}",
            lambda p, b: sum((Fraction(1, F(p, 2**j)) for j in range(b["n"] + 1)), Fraction(0)),
            _reciprocal_rhs,
        ),
        ranges={"n": config.RECIPROCAL_N_RANGE},
        valid=_positive_n,
    ),
    Identity(
        id="arctan-step",
        source="arctan addition step",
        symbols=("m",),
        printed=Statement(
            "k[1 + F_{2m+2}F_{2m}] = k F_{2m+1}^2",
            lambda p, b: p.k * (1 + F(p, 2 * b["m"] + 2) * F(p, 2 * b["m"])),
            lambda p, b: p.k * F(p, 2 * b["m"] + 1) ** 2,
        ),
        ranges={"m": N},
    ),
    Identity(
        id="pm1-curve",
        source="points on y^2 - kxy - x^2 = +-1",
        symbols=("n",),
        printed=Statement(
            "F_{n+1}^2 - kF_nF_{n+1} - F_n^2 = (-1)^n",
            lambda p, b: F(p, b["n"] + 1) ** 2 - p.k * F(p, b["n"]) * F(p, b["n"] + 1) - F(p, b["n"]) ** 2,
            lambda p, b: sgn(b["n"]),
        ),
        ranges={"n": N},
    ),
    Identity(
        id="norm-form",
        source="norm form",
        symbols=("n",),
        printed=Statement(
            "(k^2+4)F_n^2 - L_n^2 = 4(-1)^{n+1}",
            lambda p, b: p.D * F(p, b["n"]) ** 2 - L(p, b["n"]) ** 2,
            lambda p, b: 4 * sgn(b["n"] + 1),
        ),
        ranges={"n": N},
    ),
    Identity(
        id="carlitz-cubes",
        source="Carlitz cubes, Fibonacci",
        symbols=("n",),
        printed=Statement(
            "F_{n+1}^3 - (k/2)^3F_n^3 - F_{n-1}^3 = 3(k/2)F_{n+1}F_nF_{n-1}",
            *_carlitz_f_printed,
        ),
        corrected=Statement(
            "F_{n+1}^3 - k^3F_n^3 - F_{n-1}^3 = 3kF_{n+1}F_nF_{n-1}",
            *_carlitz_f,
        ),
        ranges={"n": N},
    ),
    Identity(
        id="carlitz-cubes-lucas",
        source="Carlitz cubes, Lucas",
        symbols=("n",),
        printed=Statement(
            "L_{n+1}^3 - (k/2)^3L_n^3 - L_{n-1}^3 = 3(k/2)L_{n+1}L_nL_{n-1}",
            *_carlitz_l_printed,
        ),
        corrected=Statement(
            "L_{n+1}^3 - k^3L_n^3 - L_{n-1}^3 = 3kL_{n+1}L_nL_{n-1}",
            *_carlitz_l,
        ),
        ranges={"n": N},
    ),
    # --- Classical differences of products (k = 1) ---
    Identity(
        id="product-diff-1",
        source="differences of products, classical",
        symbols=("n",),
        printed=Statement(
            "F_{n+1}F_{n+2}F_{n+6} - F_{n+3}^2 = (-1)^n F_n",
            _pd1_square,
            lambda p, b: sgn(b["n"]) * F(p, b["n"]),
        ),
        corrected=Statement(
            "F_{n+1}F_{n+2}F_{n+6} - F_{n+3}^3 = (-1)^n F_n",
            _pd1_cube,
            lambda p, b: sgn(b["n"]) * F(p, b["n"]),
        ),
        ranges={"n": N},
        k_range=CLASSICAL,
    ),
    Identity(
        id="product-diff-2",
        source="differences of products, classical",
        symbols=("n",),
        printed=Statement(
            "F_nF_{n+4}F_{n+5} - F_{n+1}^3 = (-1)^{n+1} F_{n+6}",
            _pd2_printed,
            lambda p, b: sgn(b["n"] + 1) * F(p, b["n"] + 6),
        ),
        corrected=Statement(
            "F_nF_{n+4}F_{n+5} - F_{n+3}^3 = (-1)^{n+1} F_{n+6}",
            _pd2_cube,
            lambda p, b: sgn(b["n"] + 1) * F(p, b["n"] + 6),
        ),
        ranges={"n": N},
        k_range=CLASSICAL,
    ),
    Identity(
        id="product-diff-3",
        source="differences of products, classical",
        symbols=("n",),
        printed=Statement(
            "F_{n-2}F_{n+1}^2 - F_n^3 = (-1)^{n-1} F_{n-1}",
            _pd3,
            lambda p, b: sgn(b["n"] - 1) * F(p, b["n"] - 1),
        ),
        ranges={"n": N},
        k_range=CLASSICAL,
    ),
    Identity(
        id="product-diff-4",
        source="differences of products, classical",
        symbols=("n",),
        printed=Statement(
            "F_{n+2}F_{n-1}^2 - F_n^3 = (-1)^n F_{n+1}",
            _pd4,
            lambda p, b: sgn(b["n"]) * F(p, b["n"] + 1),
        ),
        ranges={"n": N},
        k_range=CLASSICAL,
    ),
    Identity(
        id="product-diff-5",
        source="differences of products, classical",
        symbols=("n",),
        printed=Statement(
            "F_{n-3}F_{n+1}^3 - F_n^4 = (-1)^n [F_{n-1}F_{n+3} + 2F_n^2]",
            _pd5,
            lambda p, b: sgn(b["n"]) * (F(p, b["n"] - 1) * F(p, b["n"] + 3) + 2 * F(p, b["n"]) ** 2),
        ),
        ranges={"n": N},
        k_range=CLASSICAL,
    ),
    Identity(
        id="product-diff-6",
        source="differences of products, classical",
        symbols=("n",),
        printed=Statement(
            "F_{n+3}F_{n-1}^3 - F_n^4 = (-1)^n [F_n^2 + F_nF_{n-1} + 2F_{n-1}^2]",
            _pd6,
            lambda p, b: sgn(b["n"]) * (F(p, b["n"]) ** 2 + F(p, b["n"]) * F(p, b["n"] - 1) + 2 * F(p, b["n"] - 1) ** 2),
        ),
        ranges={"n": N},
        k_range=CLASSICAL,
    ),
    Identity(
        id="product-diff-7",
        source="differences of products, classical",
        symbols=("n",),
        printed=Statement(
            "F_{n+3}F_{n-1}^3 - F_n^4 = (-1)^n [F_nF_{n+1} + 2F_{n-1}^2]",
            _pd6,
            lambda p, b: sgn(b["n"]) * (F(p, b["n"]) * F(p, b["n"] + 1) + 2 * F(p, b["n"] - 1) ** 2),
        ),
        ranges={"n": N},
        k_range=CLASSICAL,
    ),
    # --- Differences of products, general k ---
    Identity(
        id="product-diff-k-1",
        source="differences of products, general k",
        symbols=("n",),
        printed=Statement(
            "F_{n+1}F_{n+2}F_{n+6} - F_{n+3}^2 = (-1)^n [k^2F_n + (k^3-1)F_{n+1}]",
            _pd1_square,
            lambda p, b: sgn(b["n"]) * (p.k**2 * F(p, b["n"]) + (p.k**3 - 1) * F(p, b["n"] + 1)),
        ),
        ranges={"n": N},
        ansatz=linear_ansatz((0, 1), 6),
        solver_lhs=_pd1_cube,
        solver_text="F_{n+1}F_{n+2}F_{n+6} - F_{n+3}^3",
    ),
    Identity(
        id="product-diff-k-2",
        source="differences of products, general k",
        symbols=("n",),
        printed=Statement(
            "F_nF_{n+4}F_{n+5} - F_{n+1}^3 = (-1)^{n+1} [F_{n+6} + k(k-1)F_{n+4}]",
            _pd2_printed,
            lambda p, b: sgn(b["n"] + 1) * (F(p, b["n"] + 6) + p.k * (p.k - 1) * F(p, b["n"] + 4)),
        ),
        ranges={"n": N},
        ansatz=linear_ansatz((0, 1), 6),
        solver_lhs=_pd2_cube,
        solver_text="F_nF_{n+4}F_{n+5} - F_{n+3}^3",
    ),
    Identity(
        id="product-diff-k-3",
        source="differences of products, general k",
        symbols=("n",),
        printed=Statement(
            "F_{n-2}F_{n+1}^2 - F_n^3 = (-1)^{n-1} [kF_{n-1} + (k^2-1)F_n]",
            _pd3,
            lambda p, b: sgn(b["n"] - 1) * (p.k * F(p, b["n"] - 1) + (p.k**2 - 1) * F(p, b["n"])),
        ),
        ranges={"n": N},
    ),
    Identity(
        id="product-diff-k-4",
        source="differences of products, general k",
        symbols=("n",),
        printed=Statement(
            "F_{n+2}F_{n-1}^2 - F_n^3 = (-1)^n [F_n + kF_{n-1}]",
            _pd4,
            lambda p, b: sgn(b["n"]) * (F(p, b["n"]) + p.k * F(p, b["n"] - 1)),
        ),
        ranges={"n": N},
    ),
    Identity(
        id="product-diff-k-5",
        source="differences of products, general k",
        symbols=("n",),
        printed=Statement(
            "F_{n-3}F_{n+1}^3 - F_n^4 = (-1)^n [F_{n-1}F_{n+3} + 2F_n^2 + (k^2-1)F_nF_{n+2}]",
            _pd5,
            lambda p, b: sgn(b["n"])
            * (
                F(p, b["n"] - 1) * F(p, b["n"] + 3)
                + 2 * F(p, b["n"]) ** 2
                + (p.k**2 - 1) * F(p, b["n"]) * F(p, b["n"] + 2)
            ),
        ),
        ranges={"n": N},
    ),
    Identity(
        id="product-diff-k-6",
        source="differences of products, general k",
        symbols=("n",),
        printed=Statement(
            "F_{n+3}F_{n-1}^3 - F_n^4 = (-1)^n [F_n^2 + F_nF_{n-1} + 2F_{n-1}^2]",
            _pd6,
            lambda p, b: sgn(b["n"]) * (F(p, b["n"]) ** 2 + F(p, b["n"]) * F(p, b["n"] - 1) + 2 * F(p, b["n"] - 1) ** 2),
        ),
        ranges={"n": N},
        ansatz=quadratic_ansatz((-1, 0), 6),
        solver_lhs=_pd6,
        solver_text="F_{n+3}F_{n-1}^3 - F_n^4",
    ),
]

REGISTRY: dict[str, Identity] = {identity.id: identity for identity in IDENTITIES}

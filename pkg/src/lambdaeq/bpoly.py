"""The two-variable partition polynomials b_l(u, v) and the moment polynomials.

b_l(u, v) is the sum over all partitions J of l of

    (-n)^{|J|} * u^{J_o} * v^{J_e} * W_p(J)

where |J| counts parts, J_o/J_e count odd/even parts, and W_p is the
alpha-weight of the partition.  Two evaluation routes exist on purpose:

* ``b_eval`` sums over the explicit partition list (the oracle; only
  feasible for small l),
* ``b_series`` produces the whole prefix b_0..b_L in O(L^2) rational
  operations from the series-exponential recurrence

      l * b_l = sum_{k=1..l} (-n * k * g(k)) * b_{l-k},

  with g(k) = u*alpha_p(k) for odd k and v*alpha_p(k) for even k.

The production code uses ``b_series`` everywhere; tests pin the two
routes against each other.
"""

from functools import lru_cache
from math import comb

from ._backend import rational
from .arith import AlphaContext
from .partitions import partitions_of

__all__ = [
    "ENUMERATION_THRESHOLD",
    "BContext",
    "b_eval",
    "b_series",
    "binomial_moment",
    "c_coeff",
    "p_poly",
]

# p(30) = 5604 partitions is still cheap to enumerate; beyond that the
# recurrence is the only sensible route.
ENUMERATION_THRESHOLD = 30


class BContext:
    """Alpha weights for a prime together with the exponent scale n in {1, 2, 4}."""

    __slots__ = ("alpha", "n")

    def __init__(self, alpha: AlphaContext, n: int):
        if n not in (1, 2, 4):
            raise ValueError("n must be one of 1, 2, 4, got %r" % (n,))
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("BContext is immutable")

    def __repr__(self):
        return "BContext(p=%d, n=%d)" % (self.alpha.p, self.n)


def b_eval(bc, l, u, v, threshold=ENUMERATION_THRESHOLD):
    """b_l(u, v) by direct summation over all partitions of l.

    Exists as the independent oracle for ``b_series`` and for small
    structural checks; raises for l above the enumeration threshold.
    """
    if l < 0:
        raise ValueError("l must be nonnegative")
    if l > threshold:
        raise ValueError(
            "l=%d exceeds the enumeration threshold %d; use b_series" % (l, threshold)
        )
    total = rational(0)
    n = bc.n
    for part in partitions_of(l):
        term = (-n) ** part.norm * bc.alpha.partition_weight(part)
        term *= u ** part.odd_count  # 0**0 == 1 keeps the empty cases right
        term *= v ** part.even_count
        total += term
    return total


def b_series(bc, max_l, u, v):
    """The prefix [b_0, ..., b_max_l] at (u, v), via the exponential recurrence.

    Eager normalization keeps the reduced values small (at the points
    (r+2h, r) they are integer eta-quotient coefficients, a few hundred
    bits even for l in the hundreds), so the plain rational recurrence
    beats any scaled-integer variant whose operands grow like l!.
    """
    if max_l < 0:
        raise ValueError("max_l must be nonnegative")
    alpha = bc.alpha.alpha
    n = bc.n
    # w[k] = -n * k * g(k); zero factors (u or v zero) are skipped below.
    w = [rational(0)] * (max_l + 1)
    for k in range(1, max_l + 1):
        scale = u if k % 2 else v
        if scale:
            w[k] = -n * k * scale * alpha(k)
    b = [rational(1)]
    for l in range(1, max_l + 1):
        acc = rational(0)
        for k in range(1, l + 1):
            wk = w[k]
            if wk:
                acc += wk * b[l - k]
        b.append(acc / l)
    return b


@lru_cache(maxsize=None)
def p_poly(s, m):
    """P_s(m), the degree-s moment polynomial.

    Defined by P_0 = 1 and (m+s) P_s(m) = m (P_{s-1}(m) + P_s(m-1)).
    The boundary P_s(0) = 0 for s >= 1 is forced by P_1(1) = 1/2.
    """
    if s < 0 or m < 0:
        raise ValueError("p_poly needs s >= 0 and m >= 0")
    if s == 0:
        return rational(1)
    if m == 0:
        return rational(0)
    return rational(m, m + s) * (p_poly(s - 1, m) + p_poly(s, m - 1))


@lru_cache(maxsize=None)
def c_coeff(s, r):
    """Coefficients expanding P_s over a binomial basis:

        P_s(m) = sum_{r=0..s} c_{s,r} * C(m, r),

    with c_{0,0} = 1 and c_{s,r} = r/(s+r) * (c_{s-1,r-1} + c_{s-1,r}).
    """
    if s < 0 or r < 0:
        raise ValueError("c_coeff needs s >= 0 and r >= 0")
    if s == 0 and r == 0:
        return rational(1)
    if r == 0 or r > s:
        return rational(0)
    return rational(r, s + r) * (c_coeff(s - 1, r - 1) + c_coeff(s - 1, r))


def binomial_moment(N, m):
    """sum_{h=0..m} h^N (-1)^{h-1} C(m, h), with the 0^0 = 1 convention.

    Vanishes for 0 <= N < m; for N >= m it equals (-1)^{m-1} P_{N-m}(m) N!.
    """
    if N < 0 or m < 1:
        raise ValueError("binomial_moment needs N >= 0 and m >= 1")
    return sum(h ** N * (1 if h % 2 else -1) * comb(m, h) for h in range(m + 1))

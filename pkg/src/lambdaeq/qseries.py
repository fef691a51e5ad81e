"""Truncated formal power series in q over exact rationals.

A ``Series`` stores coefficients c_0..c_T; terms beyond q^T are unknown
(not zero).  Every operation records how far its output can be trusted:
sums keep the smaller order, while products use valuations, so that a
product of series vanishing to high order stays valid beyond the naive
min (the unknown tail of one factor first pollutes the output at
order + valuation of the other factor).  This bookkeeping is what lets
the differential-equation residual be certified coefficient by
coefficient with no hand analysis.

The module also builds the eta-quotient expansions in q = e^{i pi t}:

    lambda(t)     = 16 q Q(t)^8  Q(4t)^16 / Q(2t)^24
    1 - lambda(t) =      Q(t)^16 Q(4t)^8  / Q(2t)^24

with Q(at) = prod_{k>=1} (1 - q^{ak}), and the normalized expansions of
X^i Y^h for X = (lambda(t) lambda(pt))^{n/8},
Y = ((1-lambda(t))(1-lambda(pt)))^{n/8}.  Multiplying the factored
forms gives

    X^i Y^h / (2^{ni} q^{mi}) =
        [Q(t)^{n(i+2h)} Q(4t)^{n(2i+h)} Q(2t)^{-3n(i+h)}] * [same at pt],

since (p+1)/8 = m/n makes the q-power exponent ni(p+1)/8 = mi.  That
product is the brute-force oracle; the same series has coefficient
b_l(i+2h, i) at q^l, which is the production route.
"""

from ._backend import rational
from .arith import alpha_context
from .bpoly import BContext, b_series

__all__ = [
    "Series",
    "euler_product",
    "lambda_series",
    "one_minus_lambda_series",
    "xy_normalized_direct",
    "xy_normalized_lemma",
]


def _is_scalar(x):
    return isinstance(x, int) or hasattr(x, "denominator")


class Series:
    """Truncated power series with exact rational coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            if not coeffs:
                raise ValueError("empty coefficient list and no order given")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coeffs) < order + 1:
            coeffs = coeffs + [0] * (order + 1 - len(coeffs))
        elif len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    def __getitem__(self, k):
        if not 0 <= k <= self.order:
            raise IndexError(
                "coefficient of q^%d unknown beyond truncation order %d" % (k, self.order)
            )
        return self.coeffs[k]

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return "Series([%s%s], order=%d)" % (head, tail, self.order)

    def valuation(self):
        """Index of the first nonzero known coefficient; order+1 if none."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return self.order + 1

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def first_nonzero(self):
        """(index, coefficient) of the first nonzero term, or None."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return (k, c)
        return None

    def truncated(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[: order + 1], order)

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __add__(self, other):
        if _is_scalar(other):
            c = list(self.coeffs)
            c[0] = c[0] + other
            return Series(c, self.order)
        order = min(self.order, other.order)
        return Series(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], order
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return Series([c * other for c in self.coeffs], self.order)
        va, vb = self.valuation(), other.valuation()
        order = min(self.order + vb, other.order + va)
        a, b = self.coeffs, other.coeffs
        out = []
        for t in range(order + 1):
            lo = max(va, t - other.order)
            hi = min(self.order, t - vb)
            acc = rational(0)
            for i in range(lo, hi + 1):
                ai = a[i]
                if ai:
                    acc += ai * b[t - i]
            out.append(acc)
        return Series(out, order)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int):
            raise TypeError("series powers must be integers")
        if e < 0:
            return self.inverse() ** (-e)
        result = Series([1], self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self):
        """Multiplicative inverse; the constant term must be nonzero."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("cannot invert a series with zero constant term")
        inv0 = rational(1) / c0
        a = self.coeffs
        b = [inv0]
        for k in range(1, self.order + 1):
            acc = rational(0)
            for i in range(1, k + 1):
                ai = a[i]
                if ai:
                    acc += ai * b[k - i]
            b.append(-acc * inv0)
        return Series(b, self.order)

    def exp(self):
        """Series exponential; the constant term must be zero."""
        if self.coeffs[0] != 0:
            raise ValueError("exp needs a series with zero constant term")
        g = self.coeffs
        f = [rational(1)]
        for l in range(1, self.order + 1):
            acc = rational(0)
            for k in range(1, l + 1):
                gk = g[k]
                if gk:
                    acc += k * gk * f[l - k]
            f.append(acc / l)
        return Series(f, self.order)

    def scale_q(self, a):
        """Substitute q -> q^a (integer a >= 1).

        Coefficients between known multiples of a are exactly zero, so the
        result is valid through a*(order+1) - 1.
        """
        if not isinstance(a, int) or a < 1:
            raise ValueError("scale_q needs an integer a >= 1")
        order = a * (self.order + 1) - 1
        out = [0] * (order + 1)
        for k, c in enumerate(self.coeffs):
            out[a * k] = c
        return Series(out, order)

    def shift(self, k):
        """Multiply by q^k (integer k >= 0); validity extends to order + k."""
        if not isinstance(k, int) or k < 0:
            raise ValueError("shift needs an integer k >= 0")
        return Series([0] * k + list(self.coeffs), self.order + k)

    def qderiv(self):
        """The operator D = q d/dq: coefficient c_k becomes k c_k."""
        return Series([k * c for k, c in enumerate(self.coeffs)], self.order)

    def to_text(self, var="q"):
        """Exact human-readable listing, e.g. '16*q - 128*q^2 + O(q^3)'."""
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = c if c > 0 else -c
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else "%s^%d" % (var, k)
                body = power if mag == 1 else "%s*%s" % (mag, power)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        head = " ".join(parts) if parts else "0"
        return "%s + O(%s^%d)" % (head, var, self.order + 1)


def euler_product(a, order):
    """prod_{k>=1} (1 - q^{ak}) truncated at the given order."""
    if not isinstance(a, int) or a < 1:
        raise ValueError("euler_product needs an integer a >= 1")
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = [0] * (order + 1)
    c[0] = 1
    for j in range(a, order + 1, a):
        # multiply in place by (1 - q^j)
        for t in range(order, j - 1, -1):
            c[t] -= c[t - j]
    return Series(c, order)


def lambda_series(order):
    """q-expansion of the modular lambda function: 16q - 128q^2 + 704q^3 - ..."""
    if order < 1:
        raise ValueError("order must be at least 1")
    t = order - 1
    unit = (
        euler_product(1, t) ** 8
        * euler_product(4, t) ** 16
        * euler_product(2, t) ** -24
    )
    return (unit * 16).shift(1)


def one_minus_lambda_series(order):
    """q-expansion of 1 - lambda, built from its own eta quotient."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return (
        euler_product(1, order) ** 16
        * euler_product(4, order) ** 8
        * euler_product(2, order) ** -24
    )


def _xy_exponents(n, i, h):
    # eta exponents at arguments (t, 4t, 2t), repeated at (pt, 4pt, 2pt)
    return n * (i + 2 * h), n * (2 * i + h), -3 * n * (i + h)


def xy_normalized_direct(params, i, h, order):
    """X^i Y^h / (2^{ni} q^{mi}) assembled directly from eta products.

    This is the brute-force oracle: integer powers of explicit Euler
    products, multiplied out, no partition machinery involved.
    """
    if i < 0 or h < 0:
        raise ValueError("exponents i, h must be nonnegative")
    e1, e4, e2 = _xy_exponents(params.n, i, h)
    result = Series([1], order)
    for scale, e in ((1, e1), (4, e4), (2, e2)):
        if e:
            factor = euler_product(scale, order) ** e
            result = result * factor
            factor_p = euler_product(scale * params.p, order) ** e
            result = result * factor_p
    return result


def xy_normalized_lemma(params, i, h, order):
    """Same series as ``xy_normalized_direct`` with coefficient b_l(i+2h, i) at q^l."""
    if i < 0 or h < 0:
        raise ValueError("exponents i, h must be nonnegative")
    bc = BContext(alpha_context(params.p), params.n)
    return Series(b_series(bc, order, i + 2 * h, i), order)

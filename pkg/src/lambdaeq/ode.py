"""Formal q-series verification of the differential equation of lambda.

With ' = d/dtau, the modular lambda function satisfies

    2 f'''/f'^3 - 3 f''^2/f'^4 = -(f^2 - f + 1) / (f^2 (1-f)^2).

In q = e^{i pi tau} the operator D = q d/dq absorbs every i*pi factor
(f' = i*pi*D f and so on; both sides scale by (i*pi)^4 after clearing
denominators), so the identity becomes the polynomial q-series statement

    2 (D^3 f)(D f) f^2 (1-f)^2 - 3 (D^2 f)^2 f^2 (1-f)^2
        + (f^2 - f + 1) (D f)^4 = 0.

Only this cleared form is checked: it needs no Laurent series for the
valuation -2 quotients, and every coefficient comparison is exact.  The
same identity rescaled by 3/2-powers is the familiar Schwarzian-style
normalization 3 (f''/f'^2)^2 - 2 f'''/f'^3 = (1 - f + f^2)/(f^2(1-f)^2);
verifying one form verifies the other.
"""

from dataclasses import dataclass

from .qseries import Series, lambda_series

__all__ = ["OdeResidual", "ode_residual"]


@dataclass(frozen=True)
class OdeResidual:
    """Residual of the cleared identity with its certified order."""

    residual: Series
    effective_order: int

    @property
    def vanishes(self):
        return self.residual.is_zero()

    def first_nonzero(self):
        return self.residual.first_nonzero()


def ode_residual(order, f=None):
    """Residual series of the cleared differential identity.

    ``f`` defaults to the lambda expansion through the given order;
    passing any other series (say 2*lambda) gives the negative control.
    The residual's own truncation order is the certified range: the
    valuation-aware products typically push it beyond the input order.
    """
    if order < 10:
        raise ValueError("order must be at least 10 for a meaningful check")
    if f is None:
        f = lambda_series(order)
    d1 = f.qderiv()
    d2 = d1.qderiv()
    d3 = d2.qderiv()
    one_minus = 1 - f
    weight = f * f * one_minus * one_minus
    residual = (
        2 * (d3 * d1 * weight)
        - 3 * (d2 * d2 * weight)
        + (f * f - f + 1) * (d1 ** 4)
    )
    return OdeResidual(residual, residual.order)

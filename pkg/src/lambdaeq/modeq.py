"""Construction and verification of the modular-equation matrices A_p.

For an odd prime p write (p+1)/8 = m/n in lowest terms (n is always 1,
2 or 4).  With X = (lambda(t) lambda(pt))^{n/8} and
Y = ((1-lambda(t)) (1-lambda(pt)))^{n/8} there is an (m+1) x (m+1)
integer matrix A_p = (a_{i,h}) such that

    sum_{i,h} a_{i,h} X^i Y^h = 0,     a_{i,h} = 0 for i + h > m,

normalized by a_{0,0} = 1.  Substituting the normalized expansions
X^i Y^h = 2^{ni} q^{mi} sum_l b_l(i+2h, i) q^l and collecting powers of
q turns this into the master system

    0 = sum_{i=0..m} 2^{ni} sum_l ( sum_h a_{i,h} b_l(i+2h, i) ) q^{mi+l}.

Row 0 is the alternating binomial row a_{0,h} = (-1)^h C(m,h).  Row i
is then determined by the coefficients of q^{mi}..q^{mi+(m-i)}: they
give the square system

    2^{ni} B(i,i) a'_i + 2^{n(i-1)} B(i,i-1) a'_{i-1} + ... + B(i,0) a_0 = 0

over the blocks B(i,r) = [b_{l+m(i-r)}(r+2h, r)] with rows l = 0..m-i
and columns h = 0..m-r, where a'_r holds the first m+1-r entries of row
r (the rest are zero).  B(i,i) is nonsingular with determinant
(-2n)^{(m+1-i)(m-i)/2}, so each row is uniquely determined; the solved
entries always come out integral, and the transpose symmetry
a_{i,h} = a_{h,i}, the horizontal symmetry
a_{i,h} = (-1)^{m(i-1)} a_{i,m-i-h}, and the vanishing of all master
coefficients beyond the ones used in solving are emergent facts that
the verify_* functions check after the fact.
"""

from dataclasses import dataclass
from math import gcd

from ._backend import as_integer, rational
from .arith import alpha_context, is_odd_prime
from .bpoly import BContext, b_series, p_poly
from .exact import Matrix, binomial

__all__ = [
    "SCHEMA_VERSION",
    "CheckResult",
    "IntegralityError",
    "ModularMatrix",
    "PrimeParams",
    "Row1Stats",
    "assemble",
    "block",
    "bordered_determinant",
    "closed_form_row1",
    "from_doc",
    "params_for",
    "render_text",
    "render_typeset",
    "row0",
    "row1_stats",
    "row2_pipeline",
    "solve_row",
    "to_doc",
    "verify_block_determinants",
    "verify_global_vanish",
    "verify_row_moments",
    "verify_symmetry",
]

SCHEMA_VERSION = 1


class IntegralityError(ArithmeticError):
    """A solved matrix entry failed to be an integer (never expected)."""


@dataclass(frozen=True)
class PrimeParams:
    """(p, m, n) with (p+1)/8 = m/n in lowest terms and n in {1, 2, 4}."""

    p: int
    m: int
    n: int

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ValueError("p must be an odd prime, got %r" % (self.p,))
        g = gcd(self.p + 1, 8)
        if (self.m, self.n) != ((self.p + 1) // g, 8 // g):
            raise ValueError(
                "inconsistent parameters: (%d+1)/8 reduces to %d/%d, not %d/%d"
                % (self.p, (self.p + 1) // g, 8 // g, self.m, self.n)
            )


def params_for(p):
    """Reduced parameters (m, n) for an odd prime p."""
    if not is_odd_prime(p):
        raise ValueError("p must be an odd prime, got %r" % (p,))
    g = gcd(p + 1, 8)
    return PrimeParams(p=p, m=(p + 1) // g, n=8 // g)


@dataclass(frozen=True)
class ModularMatrix:
    """The (m+1) x (m+1) integer coefficient matrix for one prime."""

    params: PrimeParams
    entries: tuple

    def __post_init__(self):
        m = self.params.m
        if len(self.entries) != m + 1 or any(len(r) != m + 1 for r in self.entries):
            raise ValueError("entries must form an (m+1) x (m+1) grid")
        if any(not isinstance(x, int) for r in self.entries for x in r):
            raise ValueError("entries must be plain integers")

    def entry(self, i, h):
        return self.entries[i][h]

    def with_entry(self, i, h, value):
        """Copy with one entry replaced (used by negative-control checks)."""
        grid = [list(r) for r in self.entries]
        grid[i][h] = value
        return ModularMatrix(self.params, tuple(tuple(r) for r in grid))


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification, with JSON-able details."""

    name: str
    passed: bool
    details: dict


def _bcontext(params):
    return BContext(alpha_context(params.p), params.n)


def row0(m):
    """The alternating binomial row a_{0,h} = (-1)^h C(m, h)."""
    if m < 1:
        raise ValueError("m must be positive")
    return tuple((-1) ** h * binomial(m, h) for h in range(m + 1))


def _prefix_table(params):
    """All b-series prefixes the assembly will touch, computed once.

    Row m's system needs each column prefix at its full length m(m-r),
    so precomputing loses nothing while sparing every earlier row a
    recomputation of the same prefix.
    """
    m = params.m
    bc = _bcontext(params)
    table = {}
    for r in range(m + 1):
        top = m * (m - r)
        for h in range(m - r + 1):
            table[(r + 2 * h, r)] = b_series(bc, top, r + 2 * h, r)
    return table


def block(params, i, r, table=None):
    """The block B(i, r) = [b_{l+m(i-r)}(r+2h, r)], l = 0..m-i, h = 0..m-r.

    ``table`` may hold shared b-series prefixes (see ``_prefix_table``);
    without it every column is computed fresh.
    """
    m = params.m
    if not 1 <= i <= m:
        raise ValueError("row index i must satisfy 1 <= i <= m")
    if not 0 <= r <= i:
        raise ValueError("block index r must satisfy 0 <= r <= i")
    shift = m * (i - r)
    top = shift + (m - i)
    columns = []
    for h in range(m - r + 1):
        prefix = table.get((r + 2 * h, r)) if table is not None else None
        if prefix is None or len(prefix) <= top:
            prefix = b_series(_bcontext(params), top, r + 2 * h, r)
        columns.append(prefix[shift : top + 1])
    return Matrix(list(zip(*columns)))


def solve_row(params, i, prior, table=None):
    """Solve for a'_i, the nonzero head of row i, given rows 0..i-1.

    ``prior`` holds the already-determined heads: prior[0] is the full
    row 0 (length m+1), prior[r] has length m+1-r.  Returns exact
    rationals; integrality is asserted by the caller.
    """
    m, n = params.m, params.n
    if not 1 <= i <= m:
        raise ValueError("row index i must satisfy 1 <= i <= m")
    if len(prior) != i:
        raise ValueError("need exactly the %d previously solved rows" % i)
    rhs = [rational(0)] * (m - i + 1)
    for r in range(i):
        weight = 2 ** (n * r)
        contrib = block(params, i, r, table).mul_vec(prior[r])
        rhs = [acc - weight * c for acc, c in zip(rhs, contrib)]
    head = block(params, i, i, table).solve(rhs)
    scale = 2 ** (n * i)
    return tuple(x / scale for x in head)


def assemble(p):
    """Build the full matrix A_p, asserting integrality of every entry."""
    params = params_for(p)
    m = params.m
    table = _prefix_table(params)
    grid = [row0(m)]
    prior = [grid[0]]
    for i in range(1, m + 1):
        solved = solve_row(params, i, prior, table)
        try:
            head = tuple(as_integer(x) for x in solved)
        except ValueError:
            raise IntegralityError(
                "row %d of A_%d solved to non-integer values %r" % (i, p, solved)
            ) from None
        prior.append(head)
        grid.append(head + (0,) * i)
    return ModularMatrix(params, tuple(grid))


# ---------------------------------------------------------------------------
# verification


def verify_symmetry(matrix):
    """Check a_{i,h} = a_{h,i} and a_{i,h} = (-1)^{m(i-1)} a_{i,m-i-h}."""
    m = matrix.params.m
    e = matrix.entries
    transpose_bad = [
        (i, h) for i in range(m + 1) for h in range(i + 1, m + 1) if e[i][h] != e[h][i]
    ]
    horizontal_bad = []
    for i in range(1, m + 1):
        sign = (-1) ** (m * (i - 1))
        for h in range(m - i + 1):
            if e[i][h] != sign * e[i][m - i - h]:
                horizontal_bad.append((i, h))
    details = {
        "transpose": not transpose_bad,
        "horizontal": not horizontal_bad,
        "transpose_violations": transpose_bad,
        "horizontal_violations": horizontal_bad,
    }
    return CheckResult("symmetry", not transpose_bad and not horizontal_bad, details)


def _row1_moment_expectations(params):
    """Closed forms for the first three moments of row 1.

    Returns (first, second, third, third_alternate): the third moment
    carries the alpha_p(2) term with a minus sign, which is what the
    solved rows actually satisfy; ``third_alternate`` flips that sign
    and is reported only as the known-bad variant.
    """
    m, n = params.m, params.n
    ctx = alpha_context(params.p)
    two = rational(2)
    first = -(n ** m) * two ** (m - n)
    second = -(n ** m) * two ** (m + 1 - n) * p_poly(1, m)
    lead = -(n ** m) * two ** (m + 3 - n) * p_poly(2, m)
    mid = rational(n) ** (m - 1) * two ** (m + 1 - n) * ctx.alpha(2)
    tail = rational(n) ** (m - 2) * two ** (m + 1 - n) * m * ctx.alpha(3)
    third = lead - mid - tail
    third_alternate = lead + mid - tail
    return first, second, third, third_alternate


def _row1_moments(row):
    s0 = sum(row)
    s1 = sum((1 + 2 * h) * a for h, a in enumerate(row))
    s2 = sum((1 + 2 * h) ** 2 * a for h, a in enumerate(row))
    return s0, s1, s2


def verify_row_moments(matrix):
    """First-row moment identities: sums of a_{1,h} against their closed forms.

    The first two moments match the classical statements verbatim.  The
    third matches only after flipping the sign of its alpha_p(2) term;
    both evaluations are reported, and the check passes on the corrected
    form.
    """
    params = matrix.params
    s0, s1, s2 = _row1_moments(matrix.entries[1])
    e0, e1, e2, e2_alt = _row1_moment_expectations(params)
    details = {
        "first": {"actual": str(s0), "expected": str(e0), "ok": s0 == e0},
        "second": {"actual": str(s1), "expected": str(e1), "ok": s1 == e1},
        "third": {"actual": str(s2), "expected": str(e2), "ok": s2 == e2},
        "third_alpha2_sign_flipped": {
            "value": str(e2_alt),
            "matches": s2 == e2_alt,
        },
    }
    passed = s0 == e0 and s1 == e1 and s2 == e2
    return CheckResult("rowsums", passed, details)


def verify_block_determinants(params):
    """det B(i,i) = (-2n)^{(m+1-i)(m-i)/2} for every 1 <= i <= m."""
    m, n = params.m, params.n
    per_block = []
    for i in range(1, m + 1):
        d = block(params, i, i).det()
        expected = (-2 * n) ** (((m + 1 - i) * (m - i)) // 2)
        per_block.append({"i": i, "det": str(d), "expected": str(expected), "ok": d == expected})
    return CheckResult("dets", all(b["ok"] for b in per_block), {"blocks": per_block})


def verify_global_vanish(matrix, order=None):
    """Substitute the matrix back into the master q-series and demand zero.

    Checks every coefficient of q^t for 0 <= t <= order, including the
    equations no solve ever used, so it also exercises the zero triangle
    and the trailing padding.  The order must be at least m^2 (the
    largest index any solve touched); the default adds 2m surplus
    equations on top.
    """
    params = matrix.params
    m, n = params.m, params.n
    if order is None:
        order = m * m + 2 * m
    if order < m * m:
        raise ValueError("order must be >= m^2 = %d to cover all solved equations" % (m * m))
    bc = _bcontext(params)
    acc = [rational(0)] * (order + 1)
    for i in range(m + 1):
        top = order - m * i
        if top < 0:
            break
        weight = 2 ** (n * i)
        for h in range(m + 1):
            a = matrix.entries[i][h]
            if a == 0:
                continue
            coeffs = b_series(bc, top, i + 2 * h, i)
            base = m * i
            for l, c in enumerate(coeffs):
                acc[base + l] += weight * a * c
    bad = next(((t, c) for t, c in enumerate(acc) if c != 0), None)
    details = {"order": order}
    if bad is not None:
        details["first_nonzero"] = {"power": bad[0], "coefficient": str(bad[1])}
    return CheckResult("global", bad is None, details)


# ---------------------------------------------------------------------------
# row statistics and the m = 3 structure checks


@dataclass(frozen=True)
class Row1Stats:
    """Row 1 of A_p solved on its own, with its moment identities."""

    params: PrimeParams
    row: tuple          # the m+1 integer entries a_{1,0}..a_{1,m}
    moments: tuple      # the three actual moment values
    expected: tuple     # closed forms (third with the corrected sign)
    third_alternate: object   # the sign-flipped third moment (known bad)

    @property
    def ok(self):
        return self.moments == self.expected


def row1_stats(params):
    """Solve only row 1 (one block system) and evaluate its moments."""
    m, n = params.m, params.n
    a0 = row0(m)
    rhs = [-x for x in block(params, 1, 0).mul_vec(a0)]
    head = block(params, 1, 1).solve(rhs)
    scale = 2 ** n
    try:
        row = tuple(as_integer(x / scale) for x in head) + (0,)
    except ValueError:
        raise IntegralityError("row 1 of A_%d is not integral" % params.p) from None
    s = _row1_moments(row)
    e0, e1, e2, e2_alt = _row1_moment_expectations(params)
    return Row1Stats(params, row, s, (e0, e1, e2), e2_alt)


def _require_m3(params, what):
    if params.m != 3:
        raise ValueError("%s is stated for m = 3 only (p in {5, 11, 23})" % what)


def closed_form_row1(p):
    """Closed-form expressions for a_{1,0}, a_{1,1}, a_{1,2} when m = 3.

    As stated, the three expressions evaluate to the negatives of the
    solved entries; the check accepts that global sign flip and records
    it in the report.
    """
    params = params_for(p)
    _require_m3(params, "closed_form_row1")
    m, n = params.m, params.n
    ctx = alpha_context(p)
    a2, a3 = ctx.alpha(2), ctx.alpha(3)
    p1, p2 = p_poly(1, m), p_poly(2, m)
    prefactor = rational(2) ** (m - n - 3) * rational(n) ** (m - 2)
    expressions = (
        prefactor * (2 * n * a2 + 2 * m * a3 + n * n * (15 - 16 * p1 + 8 * p2)),
        prefactor * (-4 * n * a2 - 4 * m * a3 - 2 * n * n * (5 - 12 * p1 + 8 * p2)),
        prefactor * (2 * n * a2 + 2 * m * a3 + n * n * (3 - 8 * p1 + 8 * p2)),
    )
    row = row1_stats(params).row
    entries = []
    ok = True
    for h, expr in enumerate(expressions):
        match = expr == -row[h]
        ok = ok and match
        entries.append(
            {"h": h, "expression": str(expr), "entry": row[h], "matches_negated_entry": match}
        )
    details = {"sign_flipped": True, "entries": entries}
    return CheckResult("row1-closed-forms", ok, details)


def row2_pipeline(p):
    """Determine row 2 from row-1 data alone, for m = 3.

    Solves 2^{2n} B(2,2) a'_2 = R with
    R = B(2,1) B(1,1)^{-1} B(1,0) a_0 - B(2,0) a_0, whose first
    coordinate vanishes when m = 3.  Writing C for the second
    coordinate, the solved entries satisfy a_{2,1} = -a_{2,0} and
    C = 2n * 2^{2n} * a_{2,0}; the simpler claim C = 2^{2n} a_{2,0}
    misses the 2n factor and is recorded as such.
    """
    params = params_for(p)
    _require_m3(params, "row2_pipeline")
    n = params.n
    a0 = row0(params.m)
    v = block(params, 1, 0).mul_vec(a0)
    w = block(params, 1, 1).solve(v)
    t = block(params, 2, 1).mul_vec(w)
    s = block(params, 2, 0).mul_vec(a0)
    residual = tuple(ti - si for ti, si in zip(t, s))
    first_zero = residual[0] == 0
    c = residual[1]
    head = block(params, 2, 2).solve(residual)
    scale = 2 ** (2 * n)
    a20, a21 = (x / scale for x in head)
    reference = assemble(p).entries[2]
    ok = (
        first_zero
        and a21 == -a20
        and a20 == reference[0]
        and a21 == reference[1]
    )
    details = {
        "first_coordinate_zero": first_zero,
        "C": str(c),
        "a20": str(a20),
        "a21": str(a21),
        "scale_claim_C_eq_4n_a20": c == scale * a20,
        "scale_found_C_eq_2n_4n_a20": c == 2 * n * scale * a20,
    }
    return CheckResult("row2-pipeline", ok, details)


def bordered_determinant(p):
    """The 3x3 determinant certifying a_{1,m} = 0 when m = 3.

    Columns are (b_l(3,1)), (b_l(5,1)) and (B(1,0) a_0)_l for l = 0..2;
    the determinant must equal m (-2n)^3 2^n.
    """
    params = params_for(p)
    _require_m3(params, "bordered_determinant")
    m, n = params.m, params.n
    bc = _bcontext(params)
    col_a = b_series(bc, 2, 3, 1)
    col_b = b_series(bc, 2, 5, 1)
    col_c = block(params, 1, 0).mul_vec(row0(m))
    det = Matrix([[col_a[l], col_b[l], col_c[l]] for l in range(3)]).det()
    expected = m * (-2 * n) ** 3 * 2 ** n
    details = {"det": str(det), "expected": str(expected)}
    return CheckResult("bordered-det", det == expected, details)


# ---------------------------------------------------------------------------
# serialization


def to_doc(matrix, verification=None):
    """Canonical structured document for one matrix (plain dict, JSON-able)."""
    doc = {
        "schema_version": SCHEMA_VERSION,
        "p": matrix.params.p,
        "m": matrix.params.m,
        "n": matrix.params.n,
        "matrix": [list(row) for row in matrix.entries],
    }
    if verification is not None:
        doc["verification"] = verification
    return doc


def from_doc(doc):
    """Parse a structured document back into a ModularMatrix."""
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError("unsupported schema_version %r" % (doc.get("schema_version"),))
    params = params_for(doc["p"])
    if params.m != doc["m"] or params.n != doc["n"]:
        raise ValueError("inconsistent (p, m, n) in document")
    grid = tuple(tuple(int(x) for x in row) for row in doc["matrix"])
    return ModularMatrix(params, grid)


def render_text(matrix):
    """Aligned plain-text grid with a parameter header."""
    params = matrix.params
    width = max(len(str(x)) for row in matrix.entries for x in row)
    lines = ["p = %d   m = %d   n = %d" % (params.p, params.m, params.n)]
    for row in matrix.entries:
        lines.append("  ".join(str(x).rjust(width) for x in row))
    return "\n".join(lines)


def render_typeset(matrix):
    """LaTeX array block in the conventional layout."""
    params = matrix.params
    m = params.m
    body = " \\\\\n".join(" & ".join(str(x) for x in row) for row in matrix.entries)
    return (
        "A_{%d} =\n"
        "\\left(\\begin{array}{%s}\n%s\n\\end{array}\\right)"
        " \\qquad n = %d,\\ m = %d" % (params.p, "r" * (m + 1), body, params.n, m)
    )

"""Complete-intersection checks through Wiebe's Fitting-ideal criterion.

The coefficient matrix W writes each ideal generator over a regular sequence
generating the maximal ideal (or over the variables, for the graded case).
The ideal of order-n minors of W, reduced modulo the target quotient, is
nonzero exactly when the localization is a complete intersection; the
columns of a nonzero minor name a witness generator subset.
"""

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

from .errors import NotInIdeal, NotPrimary, NotZeroDimensional
from .fields import FunctionField
from .groebner import (
    GroebnerBasis,
    buchberger,
    degree_form_ideal,
    divide_with_quotients,
    hilbert_data,
    ideal_equal,
)
from .poly import LEX, degree_form, split_by_variables
from .primdec import (
    DEFAULT_SEED,
    check_maximal,
    primary_decomposition,
    triangular_generators,
)
from .quotient import radical_zero_dim


class SyzygyMatrix:
    """n x r matrix with column j expressing f_j over the row generators:
    f_j = sum_i entries[i][j] * g_i."""

    def __init__(self, entries, row_labels, col_labels):
        self.entries = entries
        self.row_labels = list(row_labels)
        self.col_labels = list(col_labels)
        self.nrows = len(entries)
        self.ncols = len(entries[0]) if entries else 0

    def column(self, j):
        return [self.entries[i][j] for i in range(self.nrows)]

    def as_strings(self):
        return [[str(e) for e in row] for row in self.entries]


class MinorReport:
    """One order-n minor: 0-based column subset, determinant, and its normal
    form modulo the target ideal."""

    def __init__(self, column_subset, minor, residue):
        self.column_subset = tuple(column_subset)
        self.minor = minor
        self.residue = residue
        self.nonzero = not residue.is_zero()

    def as_dict(self):
        return {
            "columns": [j + 1 for j in self.column_subset],
            "minor": str(self.minor),
            "residue": str(self.residue),
            "nonzero": self.nonzero,
        }


class CIReport:
    def __init__(
        self,
        verdict,
        minors,
        witnesses,
        full_generation=None,
        hilbert=None,
        failure_reason="none",
        w_matrix=None,
    ):
        self.verdict = verdict
        self.minors = minors
        self.witnesses = [tuple(w) for w in witnesses]
        self.full_generation = full_generation
        self.hilbert = hilbert
        self.failure_reason = failure_reason
        self.w_matrix = w_matrix

    def as_dict(self):
        out = {
            "verdict": self.verdict,
            "failure_reason": self.failure_reason,
            "minors": [m.as_dict() for m in self.minors],
            "witnesses": [[j + 1 for j in w] for w in self.witnesses],
        }
        if self.full_generation is not None:
            out["full_generation"] = {
                ",".join(str(j + 1) for j in w): v
                for w, v in self.full_generation.items()
            }
        if self.hilbert is not None:
            out["hilbert"] = self.hilbert.as_dict()
        if self.w_matrix is not None:
            out["w_matrix"] = self.w_matrix.as_strings()
        return out


def build_w_matrix(fs, gs):
    """Division quotients of each f_j over the triangular generators g_i.

    The division runs in the g's own ring (a Lex ring for triangular
    generators, where they form a GB of the maximal ideal, so remainders of
    members vanish); entries are re-ringed to the f's ring.
    """
    base_ring = fs[0].ring
    g_ring = gs[0].ring
    gs_local = [g_ring.convert(g) for g in gs]
    columns = []
    for j, f in enumerate(fs):
        quotients, remainder = divide_with_quotients(g_ring.convert(f), gs_local)
        if not remainder.is_zero():
            raise NotInIdeal(j, f"generator {j + 1} is not in the span of g_1..g_n")
        columns.append([base_ring.convert(q) for q in quotients])
    entries = [[columns[j][i] for j in range(len(fs))] for i in range(len(gs))]
    return SyzygyMatrix(entries, [base_ring.convert(g) for g in gs], list(fs))


def _minor_determinant(W, cols, memo):
    """Laplace expansion along rows, memoized over (row offset, columns)."""
    ring = W.entries[0][0].ring

    def det(row, cols):
        if not cols:
            return ring.one()
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = ring.zero()
        sign = 1
        for k, c in enumerate(cols):
            entry = W.entries[row][c]
            if not entry.is_zero():
                sub = det(row + 1, cols[:k] + cols[k + 1 :])
                term = entry * sub
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        memo[key] = acc
        return acc

    return det(W.nrows - len(cols), tuple(cols))


def fitting_minor_residues(W, modulus, short_circuit=False, workers=1):
    """All order-n minors of W reduced modulo the target GB, in lexicographic
    column-subset order.

    With short_circuit, stops after the first nonzero residue (the returned
    list is then a prefix).  The worker count only parallelizes the
    normal-form map; output is identical for any value.
    """
    n, r = W.nrows, W.ncols
    subsets = list(combinations(range(r), n))
    memo = {}
    minors = [_minor_determinant(W, s, memo) for s in subsets]
    if short_circuit or workers <= 1:
        reports = []
        for s, m in zip(subsets, minors):
            residue = modulus.normal_form(m)
            reports.append(MinorReport(s, m, residue))
            if short_circuit and not residue.is_zero():
                break
        return reports
    with ThreadPoolExecutor(max_workers=workers) as pool:
        residues = list(pool.map(modulus.normal_form, minors))
    return [MinorReport(s, m, res) for s, m, res in zip(subsets, minors, residues)]


def _witnesses(minors):
    return [m.column_subset for m in minors if m.nonzero]


def check_ci_at_maximal(
    Q,
    maximal=None,
    assume_primary=False,
    seed=DEFAULT_SEED,
    short_circuit=False,
    workers=1,
    generators=None,
):
    """Wiebe's criterion at one maximal ideal.

    Q may be generators or a GroebnerBasis; the W columns are the original
    generators (or ``generators`` when the basis was recomputed upstream).
    """
    gb = Q if isinstance(Q, GroebnerBasis) else buchberger(Q)
    fs = list(generators) if generators is not None else list(gb.generators)
    if maximal is None:
        radical = radical_zero_dim(gb)
        ok, _ = check_maximal(radical, seed=seed)
        if not ok and not assume_primary:
            raise NotPrimary("the radical of Q is not maximal")
        maximal = radical
    elif not assume_primary:
        ok, _ = check_maximal(maximal, seed=seed)
        if not ok:
            raise NotPrimary("the given ideal M is not maximal")
    tri = triangular_generators(maximal, seed=seed, certified=True)
    W = build_w_matrix(fs, tri)
    minors = fitting_minor_residues(W, gb, short_circuit=short_circuit, workers=workers)
    witnesses = _witnesses(minors)
    full_generation = None
    if witnesses and not isinstance(gb.ring.field, FunctionField):
        maximal_gens = (
            maximal.elements if isinstance(maximal, GroebnerBasis) else list(maximal)
        )
        full_generation = {}
        for w in witnesses:
            subset = [fs[j] for j in w]
            rad = radical_zero_dim(subset)
            full_generation[w] = ideal_equal(rad, maximal_gens)
    return CIReport(
        verdict=bool(witnesses),
        minors=minors,
        witnesses=witnesses,
        full_generation=full_generation,
        failure_reason="none" if witnesses else "AllMinorsZero",
        w_matrix=W,
    )


def check_locally_ci(I, seed=DEFAULT_SEED, short_circuit=False, workers=1):
    """True iff every primary component is a complete intersection at its
    maximal ideal; the W columns are the original generators of I throughout."""
    gb = I if isinstance(I, GroebnerBasis) else buchberger(I)
    if not gb.is_zero_dimensional():
        raise NotZeroDimensional("locally-CI check needs a 0-dimensional ideal")
    components = primary_decomposition(gb, seed=seed)
    reports = []
    verdict = True
    for comp in components:
        report = check_ci_at_maximal(
            comp.ideal_gb,
            maximal=comp.radical_gb,
            assume_primary=True,
            seed=seed,
            short_circuit=short_circuit,
            workers=workers,
            generators=list(gb.generators),
        )
        reports.append((comp, report))
        verdict = verdict and report.verdict
    return verdict, reports


def check_sci_macaulay(I, short_circuit=False, workers=1, check_generation=True):
    """Strict-CI check via the Macaulay basis (reduced degree-compatible GB).

    The symmetry of the Castelnuovo function gates the minor computation; W
    is built over the variables from the degree forms of the basis.
    """
    gb = I if isinstance(I, GroebnerBasis) else buchberger(I)
    if not gb.ring.ordering.degree_compatible:
        gb = buchberger(gb.elements, "degrevlex")
    if not gb.is_zero_dimensional():
        raise NotZeroDimensional("strict-CI check needs a 0-dimensional ideal")
    hd = hilbert_data(gb)
    if not hd.symmetric:
        return CIReport(
            verdict=False,
            minors=[],
            witnesses=[],
            hilbert=hd,
            failure_reason="CastelnuovoAsymmetric",
        )
    macaulay, df = degree_form_ideal(gb)
    ring = gb.ring
    entries = [[None] * len(df) for _ in range(ring.nvars)]
    for j, h in enumerate(df):
        parts = split_by_variables(h)
        for i in range(ring.nvars):
            entries[i][j] = parts[i]
    W = SyzygyMatrix(entries, [ring.variable(i) for i in range(ring.nvars)], list(df))
    df_gb = buchberger(df)
    minors = fitting_minor_residues(W, df_gb, short_circuit=short_circuit, workers=workers)
    witnesses = _witnesses(minors)
    full_generation = None
    if witnesses and check_generation and not isinstance(ring.field, FunctionField):
        full_generation = {
            w: ideal_equal([macaulay[j] for j in w], gb) for w in witnesses
        }
    return CIReport(
        verdict=bool(witnesses),
        minors=minors,
        witnesses=witnesses,
        full_generation=full_generation,
        hilbert=hd,
        failure_reason="none" if witnesses else "AllMinorsZero",
        w_matrix=W,
    )

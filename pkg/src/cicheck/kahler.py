"""Kaehler differents via Jacobian minors, with the characteristic guard.

The different detects (strict / local) complete intersections only when
char(K) does not divide the vector space dimension mu; when it does, the
report withholds a verdict instead of returning a wrong boolean.
"""

from .errors import CharacteristicObstruction, NotZeroDimensional
from .groebner import GroebnerBasis, buchberger, degree_form_ideal
from .ci_core import SyzygyMatrix, fitting_minor_residues
from .poly import partial_derivative
from .primdec import DEFAULT_SEED, primary_decomposition


class KahlerReport:
    def __init__(self, jacobian, minors, theta_generators, char_ok, verdict_if_applicable, mu):
        self.jacobian = jacobian
        self.minors = minors
        self.theta_generators = theta_generators
        self.char_ok = char_ok
        self.verdict_if_applicable = verdict_if_applicable
        self.mu = mu

    def as_dict(self):
        out = {
            "jacobian": [[str(e) for e in row] for row in self.jacobian],
            "theta_generators": [str(g) for g in self.theta_generators],
            "char_ok": self.char_ok,
            "mu": self.mu,
        }
        out["verdict"] = self.verdict_if_applicable if self.char_ok else None
        return out


def _jacobian_rows(fs, ring):
    """Jacobian as an r x n nested list, entry (i, j) = d f_i / d x_j."""
    return [[partial_derivative(f, j) for j in range(ring.nvars)] for f in fs]


def _jacobian_minors(fs, modulus, workers=1):
    """Order-n minor residues; the transposed Jacobian feeds the shared
    column-subset enumeration so subsets index generator choices."""
    ring = fs[0].ring
    jac = _jacobian_rows(fs, ring)
    entries = [[jac[i][j] for i in range(len(fs))] for j in range(ring.nvars)]
    W = SyzygyMatrix(entries, [ring.variable(j) for j in range(ring.nvars)], list(fs))
    return jac, fitting_minor_residues(W, modulus, workers=workers)


def kahler_different(I, target="self", workers=1):
    """Jacobian minors of the generators (target "self") or of the degree
    form generators (target "degree_form"), reduced modulo the matching
    ideal."""
    gb = I if isinstance(I, GroebnerBasis) else buchberger(I)
    if not gb.ring.ordering.degree_compatible:
        gb = buchberger(gb.elements, "degrevlex")
    if not gb.is_zero_dimensional():
        raise NotZeroDimensional("Kaehler different needs a 0-dimensional ideal")
    mu = gb.dimension_as_vector_space()
    char = gb.ring.field.characteristic
    char_ok = char == 0 or mu % char != 0
    if target == "self":
        fs = list(gb.generators)
        modulus = gb
    else:
        _, df = degree_form_ideal(gb)
        fs = df
        modulus = buchberger(df)
    jac, minors = _jacobian_minors(fs, modulus, workers=workers)
    theta = [m.residue for m in minors if m.nonzero]
    verdict = bool(theta) if char_ok else None
    return KahlerReport(jac, minors, theta, char_ok, verdict, mu)


def kahler_local_ci_check(I, seed=DEFAULT_SEED, workers=1):
    """Per-component nonvanishing of the Kaehler different, the Remark-style
    locally-CI test; valid only when char(K) does not divide mu."""
    gb = I if isinstance(I, GroebnerBasis) else buchberger(I)
    if not gb.ring.ordering.degree_compatible:
        gb = buchberger(gb.elements, "degrevlex")
    if not gb.is_zero_dimensional():
        raise NotZeroDimensional("Kaehler locally-CI check needs a 0-dimensional ideal")
    mu = gb.dimension_as_vector_space()
    char = gb.ring.field.characteristic
    if char and mu % char == 0:
        raise CharacteristicObstruction(
            f"char {char} divides mu = {mu}; the Kaehler criterion does not apply"
        )
    fs = list(gb.generators)
    components = primary_decomposition(gb, seed=seed)
    # char | mu is not the whole story: a component of local multiplicity
    # divisible by char also defeats the criterion (e.g. (y+1)^2 over F_2,
    # whose different vanishes although the component is a hypersurface)
    for comp in components:
        if char and comp.multiplicity % char == 0:
            raise CharacteristicObstruction(
                f"char {char} divides a local multiplicity ({comp.multiplicity}); "
                "the Kaehler criterion does not apply"
            )
    verdicts = []
    overall = True
    for comp in components:
        _, minors = _jacobian_minors(fs, comp.ideal_gb, workers=workers)
        nonzero = any(m.nonzero for m in minors)
        verdicts.append((comp, nonzero))
        overall = overall and nonzero
    return overall, verdicts

"""Small exact linear-algebra helpers over a coefficient field.

Vectors are plain lists of field elements; everything is dense.  Pivoting is
always "first nonzero", which keeps results deterministic over Q and F_p.
"""


class RowReducer:
    """Incremental row echelon form with dependency tracking.

    Vectors are inserted one at a time.  If the new vector is linearly
    dependent on the previously inserted ones, ``add`` returns the
    coefficients expressing it as their combination; otherwise it stores the
    vector and returns None.
    """

    def __init__(self, field, width):
        self.field = field
        self.width = width
        # parallel lists: pivot column, reduced row, combination over inserts
        self.pivots = []
        self.rows = []
        self.combos = []
        self.inserted = 0

    def rank(self):
        return len(self.rows)

    def _reduce(self, vec):
        field = self.field
        vec = list(vec)
        combo = [field.zero()] * self.inserted
        for pivot, row, rcombo in zip(self.pivots, self.rows, self.combos):
            c = vec[pivot]
            if field.is_zero(c):
                continue
            for j in range(self.width):
                vec[j] = field.sub(vec[j], field.mul(c, row[j]))
            for j in range(len(rcombo)):
                combo[j] = field.sub(combo[j], field.mul(c, rcombo[j]))
        return vec, combo

    def add(self, vec):
        field = self.field
        if len(vec) != self.width:
            raise ValueError("vector width mismatch")
        reduced, combo = self._reduce(vec)
        pivot = next((j for j in range(self.width) if not field.is_zero(reduced[j])), None)
        self.inserted += 1
        if pivot is None:
            # vec = -sum(combo_i * inserted_i); flip signs so vec = sum(...)
            return [field.neg(c) for c in combo] + [field.zero()]
        inv = field.div(field.one(), reduced[pivot])
        row = [field.mul(c, inv) for c in reduced]
        rcombo = [field.mul(c, inv) for c in combo] + [inv]
        self.pivots.append(pivot)
        self.rows.append(row)
        self.combos.append(rcombo)
        return None

    def express(self, vec):
        """Coefficients over the inserted vectors if vec lies in their span,
        else None.  Does not insert."""
        field = self.field
        reduced, combo = self._reduce(vec)
        if any(not field.is_zero(c) for c in reduced):
            return None
        return [field.neg(c) for c in combo]


def mat_vec(field, matrix, vec):
    out = []
    for row in matrix:
        acc = field.zero()
        for a, b in zip(row, vec):
            acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return out


def mat_mul(field, a, b):
    cols = list(zip(*b))
    return [[sum_prod(field, row, col) for col in cols] for row in a]


def sum_prod(field, xs, ys):
    acc = field.zero()
    for x, y in zip(xs, ys):
        acc = field.add(acc, field.mul(x, y))
    return acc


def identity_matrix(field, n):
    return [
        [field.one() if i == j else field.zero() for j in range(n)]
        for i in range(n)
    ]


def zero_vector(field, n):
    return [field.zero()] * n

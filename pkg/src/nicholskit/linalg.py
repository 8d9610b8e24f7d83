"""Sparse exact linear algebra over the cyclotomic ground field.

Vectors are plain dicts key -> CycScalar with no stored zeros; keys are any
sortable hashables (basis words, indices, index pairs). Row reduction keeps
a fully reduced echelon (pivot coefficient one, pivots eliminated from all
other rows, pivot = minimal key), which makes every derived object --
kernels, normal forms, solved combinations -- deterministic.
"""

from __future__ import annotations

from .scalars import ONE, CycScalar


def vec_scale(v: dict, c: CycScalar) -> dict:
    if c.is_zero():
        return {}
    return {k: c * x for k, x in v.items()}


def vec_add(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, x in v.items():
        y = out.get(k)
        if y is None:
            out[k] = x
        else:
            z = y + x
            if z.is_zero():
                del out[k]
            else:
                out[k] = z
    return out


def vec_axpy_inplace(u: dict, c: CycScalar, v: dict) -> None:
    """u += c*v, destructively."""
    if c.is_zero():
        return
    for k, x in v.items():
        y = u.get(k)
        if y is None:
            u[k] = c * x
        else:
            z = y + c * x
            if z.is_zero():
                del u[k]
            else:
                u[k] = z


def vec_eq(u: dict, v: dict) -> bool:
    if set(u) != set(v):
        return False
    return all(u[k] == v[k] for k in u)


class Echelon:
    """Incrementally built reduced row echelon span of sparse vectors.

    Invariant: each stored row has its pivot scaled to one and contains no
    other row's pivot, so reducing a vector is a single pass.
    """

    def __init__(self):
        self.rows: dict = {}  # pivot key -> row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        out = dict(v)
        for pivot in [k for k in out if k in self.rows]:
            c = out.get(pivot)
            if c is not None and not c.is_zero():
                vec_axpy_inplace(out, -c, self.rows[pivot])
        return out

    def insert(self, v: dict):
        """Add v to the span. Returns the new pivot key, or None if v was
        already in the span."""
        r = self.reduce(v)
        if not r:
            return None
        pivot = min(r)
        inv = r[pivot].inverse()
        row = {k: inv * x for k, x in r.items()}
        row[pivot] = ONE
        for other in self.rows.values():
            c = other.get(pivot)
            if c is not None:
                vec_axpy_inplace(other, -c, row)
        self.rows[pivot] = row
        return pivot

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def basis(self) -> list:
        """Stored rows in increasing pivot order."""
        return [self.rows[k] for k in sorted(self.rows)]


class AugmentedEchelon:
    """Echelon of column vectors carrying the combination that produced each
    row; the workhorse behind kernels and linear solves."""

    def __init__(self):
        self.rows: dict = {}  # pivot -> (vector row, combination row)

    def feed(self, key, col: dict):
        """Process one column (tagged by its combination key). Returns a
        kernel combination if the column was dependent, else None."""
        r = dict(col)
        combo = {key: ONE}
        for pivot in [k for k in r if k in self.rows]:
            c = r.get(pivot)
            if c is not None and not c.is_zero():
                vec_row, combo_row = self.rows[pivot]
                vec_axpy_inplace(r, -c, vec_row)
                vec_axpy_inplace(combo, -c, combo_row)
        if not r:
            return combo
        pivot = min(r)
        inv = r[pivot].inverse()
        vec_row = {k: inv * x for k, x in r.items()}
        vec_row[pivot] = ONE
        combo_row = {k: inv * x for k, x in combo.items()}
        for v_other, c_other in self.rows.values():
            c = v_other.get(pivot)
            if c is not None:
                vec_axpy_inplace(v_other, -c, vec_row)
                vec_axpy_inplace(c_other, -c, combo_row)
        self.rows[pivot] = (vec_row, combo_row)
        return None

    def express(self, target: dict):
        """A combination of the fed columns equal to target, or None."""
        residue = dict(target)
        solution: dict = {}
        for pivot in [k for k in residue if k in self.rows]:
            c = residue.get(pivot)
            if c is not None and not c.is_zero():
                vec_row, combo_row = self.rows[pivot]
                vec_axpy_inplace(residue, -c, vec_row)
                vec_axpy_inplace(solution, c, combo_row)
        if residue:
            return None
        return solution


def span_rank(vectors) -> int:
    ech = Echelon()
    for v in vectors:
        ech.insert(v)
    return ech.rank


def kernel_of_columns(columns: list) -> list:
    """Kernel of the linear map with the given (key, vector) columns, as a
    list of sparse combination dicts, in deterministic order."""
    aug = AugmentedEchelon()
    kernel = []
    for key, col in columns:
        combo = aug.feed(key, col)
        if combo is not None:
            kernel.append(combo)
    return kernel


def linear_solve(columns: list, target: dict):
    """A combination {key: coeff} with sum coeff * column == target, or None."""
    aug = AugmentedEchelon()
    for key, col in columns:
        aug.feed(key, col)
    return aug.express(target)

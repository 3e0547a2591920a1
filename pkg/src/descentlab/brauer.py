"""Irreducible Brauer character tables of S_n, shipped as JSON data.

A table lists the p-regular partitions (labels of simple modules), the
p-regular classes (cycle types with no part divisible by p) and the integer
values.  When p > n the group order is prime to p and the ordinary character
table is used instead of a file.
"""

import hashlib
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import factorial

from .combinat import conjugacy_class_size, enumerate_partitions

DATA_ENV = "DESCENTLAB_DATA"


class MissingData(LookupError):
    pass


@dataclass(frozen=True)
class BrauerTable:
    p: int
    n: int
    labels: tuple
    classes: tuple
    values: tuple

    def __post_init__(self):
        regular = tuple(enumerate_partitions(self.n, self.p))
        if sorted(self.labels) != sorted(regular):
            raise ValueError(f"labels {self.labels} are not the {self.p}-regular partitions of {self.n}")
        expected = tuple(mu for mu in enumerate_partitions(self.n) if is_p_class_regular(mu, self.p))
        if sorted(self.classes) != sorted(expected):
            raise ValueError(f"classes {self.classes} are not the {self.p}-regular classes of S_{self.n}")
        if len(self.values) != len(self.labels) or any(len(row) != len(self.classes) for row in self.values):
            raise ValueError("Brauer table is not square over the regular index set")

    def value(self, label, cls):
        return self.values[self.labels.index(tuple(label))][self.classes.index(tuple(cls))]

    def row(self, label):
        return dict(zip(self.classes, self.values[self.labels.index(tuple(label))]))

    def checksum(self):
        return table_checksum(self.p, self.n, self.labels, self.classes, self.values)


def is_p_class_regular(mu, p):
    """A cycle type is p-regular when no cycle length is divisible by p."""
    return p == 0 or all(part % p for part in mu)


def table_checksum(p, n, labels, classes, values):
    payload = json.dumps([p, n, [list(x) for x in labels], [list(x) for x in classes],
                          [list(r) for r in values]], separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def _data_dirs():
    env = os.environ.get(DATA_ENV)
    if env:
        yield env
    yield str(resources.files("descentlab") / "data")


def load_brauer_table(p, n):
    if p > n or p == 0:
        return ordinary_table(p, n)
    name = f"brauer_p{p}_n{n}.json"
    for d in _data_dirs():
        path = os.path.join(d, name)
        if os.path.exists(path):
            return parse_table(json.load(open(path)), source=path)
    raise MissingData(f"no Brauer table for p={p}, n={n} (looked for {name})")


def parse_table(obj, source="<data>"):
    for key in ("p", "n", "labels", "classes", "values"):
        if key not in obj:
            raise ValueError(f"{source}: missing field {key!r}")
    table = BrauerTable(
        p=obj["p"], n=obj["n"],
        labels=tuple(tuple(x) for x in obj["labels"]),
        classes=tuple(tuple(x) for x in obj["classes"]),
        values=tuple(tuple(int(v) for v in row) for row in obj["values"]),
    )
    if "checksum" in obj and obj["checksum"] != table.checksum():
        raise ValueError(f"{source}: checksum mismatch")
    return table


def ordinary_table(p, n):
    from .characters import irreducible_character
    labels = tuple(enumerate_partitions(n))
    classes = tuple(enumerate_partitions(n))
    values = tuple(tuple(irreducible_character(lam, mu) for mu in classes) for lam in labels)
    return BrauerTable(p=p, n=n, labels=labels, classes=classes, values=values)


def pairing(table, psi):
    """Map gamma -> (1/n!) sum over regular classes |C_mu| psi(mu) beta^gamma(mu)."""
    out = {}
    for gamma in table.labels:
        total = Fraction(0)
        for mu in table.classes:
            total += conjugacy_class_size(mu) * Fraction(psi[mu]) * table.value(gamma, mu)
        out[gamma] = total / factorial(table.n)
    return out


def decomposition_matrix(table):
    """d[lam][gamma] with chi^lam restricted to regular classes = sum_gamma d beta^gamma."""
    from .characters import irreducible_character
    labels, classes = table.labels, table.classes
    k = len(labels)
    # solve B^T d_lam = chi_lam, B the k x k Brauer matrix (rows labels, cols classes)
    B = [[Fraction(table.values[i][j]) for j in range(k)] for i in range(k)]
    out = {}
    for lam in enumerate_partitions(table.n):
        rhs = [Fraction(irreducible_character(lam, mu)) for mu in classes]
        coeffs = _solve_transpose(B, rhs)
        out[lam] = dict(zip(labels, coeffs))
    return out


def _solve_transpose(B, rhs):
    k = len(B)
    # system: sum_i x_i B[i][j] = rhs[j] for every j
    A = [[B[i][j] for i in range(k)] + [rhs[j]] for j in range(k)]
    for c in range(k):
        piv = next(r for r in range(c, k) if A[r][c])
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [v * inv for v in A[c]]
        for r in range(k):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return [A[r][k] for r in range(k)]


def projective_dimensions(table):
    """dim P^gamma = sum_lam d[lam][gamma] * chi^lam(1) (Brauer reciprocity)."""
    from .characters import dimension
    d = decomposition_matrix(table)
    return {gamma: sum(d[lam][gamma] * dimension(lam) for lam in d) for gamma in table.labels}


def validate_table(table):
    """Consistency checks that do not assume the table is right.

    The decomposition numbers must be nonnegative integers and the simple
    dimensions must be positive.
    """
    problems = []
    for lam, row in decomposition_matrix(table).items():
        for gamma, v in row.items():
            if v.denominator != 1 or v < 0:
                problems.append(f"decomposition number d[{lam}][{gamma}] = {v}")
    ident = tuple([1] * table.n)
    for gamma in table.labels:
        if table.value(gamma, ident) <= 0:
            problems.append(f"beta^{gamma}(1) is not positive")
    if not problems:
        dims = projective_dimensions(table)
        total = sum(dims[g] * table.value(g, ident) for g in table.labels)
        if total != factorial(table.n):
            problems.append(f"sum of dim P * dim D is {total}, not {table.n}!")
    return problems

"""Orthogonal primitive idempotents of the descent algebra over F_p.

The Young characters restricted to p-regular partitions form a lower
triangular matrix Phi.  Its inverse Psi gives elements f_lam mapping to the
class indicators under the Solomon map.  These are lifted to genuine
idempotents by raising to a p-power and orthogonalized by a cascade that
runs through the partitions in the canonical order.
"""

from dataclasses import dataclass, field as dc_field

from .combinat import (
    ORDER_ID,
    canonical_order,
    enumerate_partitions,
    facmulti,
    is_p_regular,
    is_weak_refinement,
    is_equivalent,
)
from .descent import DescentVector, class_indicator, solomon_epimorphism, young_character
from .fields import Field


def regular_order(n, p):
    """The p-regular partitions of n in the canonical total order."""
    return canonical_order(enumerate_partitions(n, p))


def phi_psi(n, p, order=None):
    """(order, Phi, Psi) with Phi[i][j] = phi^{lam_i}(lam_j) mod p and Psi = Phi^-1."""
    order = list(order) if order is not None else regular_order(n, p)
    m = len(order)
    Phi = [[young_character(lam)[mu] % p for mu in order] for lam in order]
    # Phi is lower triangular with invertible diagonal; invert by forward substitution
    Psi = [[0] * m for _ in range(m)]
    for col in range(m):
        for row in range(m):
            acc = (1 if row == col else 0)
            for k in range(row):
                acc -= Phi[row][k] * Psi[k][col]
            Psi[row][col] = acc * pow(Phi[row][row], -1, p) % p
    return order, Phi, Psi


def f_vector(lam, n, p):
    lam = tuple(lam)
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam} is not {p}-regular")
    order, _, Psi = phi_psi(n, p)
    row = Psi[order.index(lam)]
    return DescentVector(n, Field(p), {mu: c for mu, c in zip(order, row)})


def lift_exponent(n, p):
    """Smallest p^k with p^k >= n - 1."""
    power = 1
    while power < n - 1:
        power *= p
    return power


def lift_power(x, n, p):
    y = x ** lift_exponent(n, p)
    if y * y != y:
        raise AssertionError(f"lifted element is not idempotent: {y}")
    return y


@dataclass
class IdempotentSet:
    p: int
    n: int
    order: list
    idempotents: dict
    f_vectors: dict = dc_field(default_factory=dict)
    cascade: list = dc_field(default_factory=list)
    order_id: str = ORDER_ID

    def __getitem__(self, lam):
        return self.idempotents[tuple(lam)]


def modular_idempotents(n, p, order=None):
    """The cascade f'_1 = 1, f'_i = (f'_{i-1} f_{>=i} f'_{i-1})^{p^k}, e_i = f'_i - f'_{i+1}.

    ``order`` overrides the canonical order; it must list the p-regular
    partitions so that weak refinements come first.
    """
    F = Field(p)
    order = list(order) if order is not None else regular_order(n, p)
    for i, lam in enumerate(order):
        for mu in order[:i]:
            if is_weak_refinement(lam, mu) and lam != mu:
                raise ValueError(f"order puts {mu} before its refinement {lam}")
    fs = [f_vector(lam, n, p) for lam in order]
    m = len(order)
    cascade = [DescentVector.one(n, F)]
    for i in range(1, m):
        tail = DescentVector.zero(n, F)
        for f in fs[i:]:
            tail = tail + f
        prev = cascade[-1]
        cascade.append(lift_power(prev * tail * prev, n, p))
    cascade.append(DescentVector.zero(n, F))
    idem = {lam: cascade[i] - cascade[i + 1] for i, lam in enumerate(order)}
    return IdempotentSet(p=p, n=n, order=order, idempotents=idem,
                         f_vectors=dict(zip(order, fs)), cascade=cascade)


def check_idempotent_set(idem):
    """Return a list of failed invariants (empty when everything holds)."""
    failures = []
    n, p = idem.n, idem.p
    F = Field(p)
    total = DescentVector.zero(n, F)
    for lam, e in idem.idempotents.items():
        total = total + e
        if e * e != e:
            failures.append(f"e_{lam} is not idempotent")
        for mu, g in idem.idempotents.items():
            if mu != lam and not (e * g).is_zero():
                failures.append(f"e_{lam} e_{mu} != 0")
        if solomon_epimorphism(e) != class_indicator(lam, F):
            failures.append(f"Solomon image of e_{lam} is not the class indicator")
        lead = F(1) * pow(facmulti(lam) % p, -1, p)
        if e.coefficient(lam) != lead:
            failures.append(f"leading coefficient of e_{lam} is {e.coefficient(lam)}, not {lead}")
        for xi in e.coeffs:
            if xi != lam and not (is_weak_refinement(xi, lam) and not is_equivalent(xi, lam)):
                failures.append(f"e_{lam} has a term {xi} outside the strict weak refinements")
    if total != DescentVector.one(n, F):
        failures.append("idempotents do not sum to 1")
    return failures

"""Exact computations in descent algebras and higher Lie modules of symmetric groups."""

__version__ = "0.1.0"

from .algebra import AlgebraElement, right_ideal_rank
from .combinat import ORDER_ID, enumerate_compositions, enumerate_partitions
from .descent import DescentVector, omega_q
from .fields import Field, QQ
from .modidem import check_idempotent_set, modular_idempotents

__all__ = [
    "AlgebraElement",
    "DescentVector",
    "Field",
    "ORDER_ID",
    "QQ",
    "check_idempotent_set",
    "enumerate_compositions",
    "enumerate_partitions",
    "modular_idempotents",
    "omega_q",
    "right_ideal_rank",
]

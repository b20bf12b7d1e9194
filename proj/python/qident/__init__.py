"""Exact q-series and partition-class verification engine."""

from qident._qident import (  # noqa: F401
    QidentError,
    QSeries,
    SignedMonomial,
    class_count,
    class_gf,
    class_members,
    enumerate_partitions,
    identity_names,
    k_block_conjugate,
    lemma1_forward,
    lemma1_inverse,
    monomial,
    nested_sum,
    partition_count,
    poch_finite,
    poch_infinite,
    summation_rhs,
    telescope_eval,
    theorem_names,
    verify_identity,
    verify_identity_grid,
    verify_partition_theorem,
)

__all__ = [
    "QidentError",
    "QSeries",
    "SignedMonomial",
    "class_count",
    "class_gf",
    "class_members",
    "enumerate_partitions",
    "identity_names",
    "k_block_conjugate",
    "lemma1_forward",
    "lemma1_inverse",
    "monomial",
    "nested_sum",
    "partition_count",
    "poch_finite",
    "poch_infinite",
    "summation_rhs",
    "telescope_eval",
    "theorem_names",
    "verify_identity",
    "verify_identity_grid",
    "verify_partition_theorem",
]

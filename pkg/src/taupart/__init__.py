"""Exact computation of Ramanujan's tau function, Newton-recursion solvers,
and the partition graphs whose automorphism counts are ``z_lambda``."""

from .numtheory import ExactRational, InexactDivisionError, divisor_sum, exact_div, sigma
from .partitions import Partition, apply_to_function, enumerate_partitions, parse_partition, z
from .series import TruncatedSeries, apostol_recursion, int_power, multiply, product_expansion
from .newton import (
    RecursionProblem,
    bareiss_determinant,
    determinant_solve,
    partition_sum_solve,
    recursion_solve,
)
from .ramanujan import (
    METHODS,
    tau,
    tau_bko,
    tau_cross_check,
    tau_determinant,
    tau_partition_sum,
    tau_product,
    tau_recursion,
    tau_sequence,
)
from .graphs import (
    DirectedGraph,
    Permutation,
    brute_force_aut_count,
    build_graph,
    export_dot,
    is_automorphism,
    permute_graph,
    structural_aut_count,
    symmetry_number,
)

__version__ = "0.1.0"

"""Order classes of Hamiltonian and abelian groups, and the classification of
Hamiltonian groups with perfect order classes."""

from .analysis import (
    ClassificationReport,
    PocVerdict,
    audit_poc_hamiltonian,
    classify_poc_hamiltonian,
    is_perfect_order_classes,
    necessary_divisibility_conditions,
    theorem_predicted_set,
)
from .bruteforce import BACKEND, brute_force_order_counts, element_order, hall_projection_check
from .closedform import (
    OrderClassTable,
    abelian_order_counts,
    coprime_product_counts,
    cyclic_order_counts,
    group_order_counts,
    hamiltonian_order_counts,
    lcm_convolve,
    quaternion_order_counts,
)
from .groupspec import (
    AbelianSpec,
    GroupSpec,
    HamiltonianSpec,
    direct_product,
    enumerate_hamiltonian,
    make_abelian,
    parse_spec,
    render_spec,
    to_hamiltonian,
)
from .numtheory import divisors, euler_phi, factorize, solve_consecutive_prime_powers

__version__ = "0.1.0"

"""schurcc: dimension growth of constacyclic codes under the Schur product.

The toolkit computes, for a code given by a generator polynomial g | x^n - a
over a prime field, its dimension (Hilbert) sequence and stabilization
index, the pattern polynomial driving the equilibrium regime, generators
and exact minimum distance of the stabilized powers, invariance and cycle
diagnostics, plus batch experiments over all generators of a quotient ring.
"""

from .analysis import (
    HilbertReport,
    PatternInfo,
    SupportBattery,
    analyze_code,
    disjoint_support_battery,
    enumerate_invariant_cyclic,
    equilibrium_cycle_length,
    equilibrium_generator,
    equilibrium_min_distance,
    hilbert_report,
    is_invariant_at_equilibrium,
    pattern_polynomial,
)
from .code import (
    ConstacyclicCode,
    MinDistanceResult,
    code_from_generator,
    generator_from_basis,
    is_constacyclic,
    min_distance,
    shift,
)
from .errors import (
    BelowRegularity,
    ConfigError,
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    NotADivisor,
    NotConstacyclic,
    NotCoprime,
    NotPrime,
    ProjectionNotConstacyclic,
    RingMismatch,
    SchurError,
    UnstabilizedError,
    ZeroCode,
    ZeroElement,
    ZeroGenerator,
)
from .experiment import (
    ExperimentConfig,
    ExperimentResult,
    emit_reports,
    load_config,
    run_experiment,
)
from .gf import FieldElement, FieldSpec, multiplicative_order
from .linalg import MatrixFq, in_row_space, rref, row_spaces_equal
from .polyring import (
    Poly,
    RingSpec,
    enumerate_divisors,
    factor_modulus,
    parse_poly,
    ring_reduce,
)
from .quasitwisted import QuasiTwistedCode, block_shift, decompose, project
from .schur import SpanCode, code_power, code_product, poly_schur_power, schur_vec

__version__ = "0.1.0"

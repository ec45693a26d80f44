"""genusgate: decides whether a closed congruence surface built from a
maximal order in a quaternion algebra can have a given genus, over a
database of totally real number fields.  Verdicts are proofs: RuledOut
is certified by exact arithmetic, Inconclusive only means the necessary
conditions did not exclude every candidate."""

__version__ = "0.1.0"

from .algebra import (
    ModFactorization,
    Polynomial,
    PrimePower,
    divisors,
    factor_mod_p,
    is_prime,
    poly_discriminant,
    prime_power,
    sigma1,
    sturm_real_roots,
)
from .bounds import DegreeCap, max_degree, odlyzko_C, rootdisc_D
from .fielddb import (
    FieldDatabase,
    FieldRecord,
    load_database,
    parse_table,
    validate_record,
)
from .numberfield import (
    NeedsOverride,
    NumberField,
    PrimeShape,
    dedekind_test,
    make_field,
    primes_with_norm,
    rational_field,
    splitting_type,
)
from .prover import GlobalStatus, GlobalVerdict, prove_genus, run_cli
from .ramsearch import (
    RamCandidate,
    Verdict,
    VerdictStatus,
    candidate_factorizations,
    enumerate_ram_sets,
    field_verdict,
    genus_from_set,
    target_product,
)
from .torsion import SieveOutcome, SieveVerdict, elim2_candidate, elim3_candidate, sieve
from .zeta import (
    ZetaRatio,
    genus_factor,
    validate_zeta,
    zagier_e1,
    zagier_quadratic,
    zeta_bounds,
)

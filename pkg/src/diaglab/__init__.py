"""Brute-force toolkit for restricted diagnosability of interconnection networks."""

from .distinguishability import (
    DiagnosticModel,
    DistinguishabilityVerdict,
    mmstar_distinguishable,
    pmc_distinguishable,
    syndrome_oracle_distinguishable,
)
from .engine import (
    BoundCertificate,
    DiagnosabilityResult,
    brute_force_diagnosability,
    lower_bound_certificate,
    relation_audit,
    upper_bound_from_witness,
)
from .errors import (
    DiagLabError,
    InvalidInputError,
    NeedsIsolationArgumentError,
    NoCutExistsError,
    NotApplicableError,
    RangeError,
    VerificationFailedError,
)
from .fault_models import (
    ConnectivityResult,
    FaultModelSpec,
    is_faulty_set,
    is_m_cut,
    m_connectivity,
    super_connected_check,
)
from .graph import (
    Graph,
    closed_neighborhood,
    common_neighbors,
    components,
    distance,
    is_vertex_cut,
    open_neighborhood,
)
from .topology import TopologySpec, arrangement, hypercube, nk_star

__version__ = "0.1.0"

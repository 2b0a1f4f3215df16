"""Exact GF(2) q-series arithmetic and certified parity congruences for
partition generating functions."""

from .f2series import (BadResidue, ConstantTermZero, F2Series, OffsetMismatch,
                       eta_power, euler, from_support, one, zero)
from .partitions import (ParityTable, multipartition_parity, partition_parity,
                         regular_parity)
from .etaquot import (Cusp, EtaQuotient, ModularityReport, cusp_set, ghn_check,
                      kronecker, ligozat_order, parse_eta_quotient)
from .radu import (NonIntegralNu, RaduTuple, delta_star_check, nu, p_set,
                   radu47_lower_bound, search_s_vector, theorem45_check)
from .certifier import (CongruenceClaim, ProofCertificate, catalog, certify,
                        certify_all, claim_by_id, numeric_verify, sturm_bound)
from .density import (DensityEstimate, conjecture_table, landau_check,
                      odd_density, regular_relation_check)

__version__ = "0.1.0"

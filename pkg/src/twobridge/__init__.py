"""Exact-arithmetic toolkit for two-bridge knots: essential spanning
surfaces via continued fractions, classical cosmetic-surgery obstructions,
and certificate-emitting comparisons of surgered manifolds."""

from .checker import check_payload
from .invariants import (LaurentPolynomial, NiWuReport, alexander,
                         alexander_fox, boyer_lines_obstructs, delta2_at_1,
                         determinant, invariant_summary, niwu_filter,
                         normalize_alexander, seifert_matrix, signature, tau)
from .knots import (ROLFSEN_ALIASES, TwoBridgeKnot, canonical, enumerate_knots,
                    inverse_rep, is_amphicheiral, make_knot, mirror_knot,
                    parse_knot, same_knot)
from .obstruction import (CandidateRuling, ExclusionCertificate,
                          ExclusionFailure, ParityCertificate,
                          UpperBoundCertificate, Verdict,
                          admits_closed_nonorientable, distinguish,
                          exclusion_bound, upper_bound_genus)
from .slopes import (MERIDIAN, ZERO_SLOPE, Slope, distance, has_even_numerator,
                     is_meridian, make_slope, parse_slope)
from .surfaces import (CFExpansion, DegenerateExpansionError,
                       SurfaceDescriptor, boundary_count, boundary_slope,
                       build_descriptor, cf_value, descriptor_to_json,
                       enumerate_expansions, even_expansion, expansion,
                       knot_fractions, spanning_surfaces, surface_table)

__version__ = "0.1.0"

"""A workbench for sum-free sets of integers.

Exact set algebra, sum-freeness and r-wise sum-freeness decisions, extremal
searches, structural classifiers, exhaustive finite lemma verifiers, exact
family counting with dual engines, and the exponent-optimization lab.
"""

__version__ = "0.1.0"

from .intset import (IntSet, SignedSet, SetStats, EmptySetError,  # noqa: F401
                     sumset, difference_set, positive_part, k_fold_sumset,
                     dilate, stats, diff_gcd, residue_class_set,
                     to_text, from_text, from_file)
from .schur import (SchurTriple, PartitionWitness, MuResult,  # noqa: F401
                    HResult, schur_triples, is_sum_free, is_sum_free_mod,
                    is_r_wise_sum_free, r_wise_witness, mu, h)
from .structure import (ClassificationReport, StabilityReport,  # noqa: F401
                        classify, freiman_check, dfst_check,
                        stability_classify, type_ab_classify, structure_scan)
from .counting import (CountRecord, BoundReport, CapExceededError,  # noqa: F401
                       count_sum_free, count_two_wise_sum_free, entropy,
                       entropy_binomial_check, restricted_partitions,
                       green_morris_bound, janson_bound, forbidden_graph)
from .oracles import (VerificationReport, APCover,  # noqa: F401
                      verify_long_interval, verify_summation,
                      verify_bootstrap, verify_lev_smeliansky_diff,
                      ap_cover_check, conjecture41_search, example42,
                      plunnecke_check)
from .optlab import (OptimumReport, evaluate_h, maximize_h,  # noqa: F401
                     maximize_g, maximize_f, gradient_check)

"""Exact inv/minimaj equidistribution on ordered multiset partitions."""

from .colored import ColoredLetter, ColoredOSP, colored_inv, colored_minimaj, flag_maj, parse_colored
from .distributions import DistributionKey, distribution, joint_distribution
from .partitions import OrderedMultisetPartition, SegmentedWord, enum_omp, enum_osp, parse_omp, print_omp
from .qpoly import QPoly, f_poly, q_binomial, q_factorial, q_integer, q_stirling
from .report import Report
from .statistics import inv_omp, maj_word, minimaj, segmented_word
from .switch_maps import omp_switch
from .symfunc import monomial_to_schur, schur_expansion_formula, val_expansion

__version__ = "0.1.0"

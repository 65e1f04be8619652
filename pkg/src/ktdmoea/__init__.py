"""Dynamic multi-objective optimization with a changing number of objectives.

Core pieces: dynamic benchmark problems with analytic fronts, a
knowledge-transfer evolutionary algorithm responding to objective-count
changes by expanding or contracting the optimal set, baseline optimizers,
quality indicators, nonparametric comparison tests and a reproducible
experiment harness.
"""

from .core import (
    Individual,
    Population,
    dominates,
    extreme_points,
    make_rng,
    nondominated_sort,
    rand_open_closed,
)
from .metrics import (
    MetricSnapshot,
    generational_distance,
    hypervolume,
    maximum_spread,
)
from .operators import VariationConfig, das_dennis_weights
from .problems import ChangeSchedule, DynamicProblem, make_problem, reference_front
from .stats import ObservationMatrix, friedman_test, nemenyi_cd, wilcoxon_rank_sum
from .transfer import TransferConfig, transfer

__version__ = "0.1.0"

__all__ = [
    "ChangeSchedule", "DynamicProblem", "Individual", "MetricSnapshot",
    "ObservationMatrix", "Population", "TransferConfig", "VariationConfig",
    "das_dennis_weights", "dominates", "extreme_points", "friedman_test",
    "generational_distance", "hypervolume", "make_problem", "make_rng",
    "maximum_spread", "nemenyi_cd", "nondominated_sort", "rand_open_closed",
    "reference_front", "transfer", "wilcoxon_rank_sum",
]

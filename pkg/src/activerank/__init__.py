"""Active ranking of objects embedded in R^d from pairwise comparisons."""

__version__ = "0.1.0"

from .combinatorics import count_bounds, count_rankings, lower_bound_bits, random_query_unique_prob
from .errors import (
    ActiveRankError,
    ContractError,
    DegeneratePairError,
    FormatError,
    InconsistencyError,
    NumericalFailure,
    SessionAborted,
    TieError,
)
from .geom import ConstraintSet, Embedding, Hyperplane, bisector, has_interior, impute_label, interior_point, is_ambiguous, side_of
from .metrics import kendall_tau, label_disagreement, labels_from_permutation, labels_from_reference
from .oracle import GeometricOracle, InteractiveOracle, MatrixOracle, NoiseSpec
from .ranker import RankingResult, rank_errorfree, rank_random_queries
from .robust import PartialRankingResult, VoteConfig, complete_ranking, rank_majority_repeat, rank_robust, voting_set, vote_decide

__all__ = [name for name in dir() if not name.startswith("_")]

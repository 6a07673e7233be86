"""Clustering sets of functional data by similarity in law."""

from .bounds import (
    ThresholdConfig,
    ThresholdResult,
    bernstein_bound,
    epsilon_delta,
    gamma_big,
    gamma_star,
    minimize_threshold,
    theorem1_bound,
)
from .dendrogram import DendrogramModel, Merge, complete_linkage, cut_at_threshold, partition_at_k
from .directions import (
    DirectionSet,
    sample_brownian_bridge,
    sample_directions,
    sample_wiener,
)
from .distance import (
    ECDF,
    DistanceMatrix,
    PairDistance,
    distance_matrix,
    ecdf,
    kolmogorov_sf,
    ks_gof_test,
    ks_two_sample,
    pair_distance,
)
from .errors import *  # noqa: F401,F403
from .pipeline import ClusterResult, cluster_datasets
from .projection import ProjectionSet, project, project_set
from .simulate import (
    ExperimentConfig,
    ExperimentReport,
    gen_ar,
    gen_sbb,
    partition_metrics,
    run_experiment,
    run_replicate,
)
from .types import DataSet, FunctionalSample, Grid, Partition, validate_common_grid

__version__ = "0.1.0"

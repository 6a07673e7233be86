"""Complete-linkage agglomeration and partition selection."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .distance import DistanceMatrix
from .errors import InvalidK, TooFewSets
from .types import Partition


@dataclass(frozen=True)
class Merge:
    left: tuple
    right: tuple
    height: float


@dataclass(frozen=True)
class DendrogramModel:
    """Merge sequence from singletons to a single cluster.

    ``merges[k]`` joins two clusters of the partition with ``len(labels) - k``
    clusters; ``height`` is their complete-linkage distance.
    """

    labels: tuple
    merges: tuple[Merge, ...]

    @property
    def heights(self) -> np.ndarray:
        return np.array([m.height for m in self.merges])

    def _replay(self, n_merges: int) -> Partition:
        cluster_of = {label: (label,) for label in self.labels}
        for m in self.merges[:n_merges]:
            joined = m.left + m.right
            for label in joined:
                cluster_of[label] = joined
        ids: dict = {}
        return Partition({lab: ids.setdefault(cluster_of[lab], len(ids)) for lab in self.labels})

    def to_json(self, path=None) -> str:
        doc = {
            "labels": [str(lab) for lab in self.labels],
            "merges": [
                {
                    "left": [str(lab) for lab in m.left],
                    "right": [str(lab) for lab in m.right],
                    "height": m.height,
                }
                for m in self.merges
            ],
        }
        text = json.dumps(doc, indent=2)
        if path is not None:
            Path(path).write_text(text + "\n")
        return text

    @classmethod
    def from_json(cls, text: str) -> DendrogramModel:
        doc = json.loads(text)
        merges = tuple(
            Merge(tuple(m["left"]), tuple(m["right"]), float(m["height"])) for m in doc["merges"]
        )
        return cls(tuple(doc["labels"]), merges)


def complete_linkage(matrix: DistanceMatrix) -> DendrogramModel:
    """Agglomerate singletons, always merging the closest pair of clusters
    under complete linkage (largest pairwise distance between members).

    Exact ties go to the pair whose (smallest label, smallest label) is
    lexicographically smallest.
    """
    S = matrix.size
    if S < 2:
        raise TooFewSets(f"need at least 2 labels, got {S}")
    labels = matrix.labels
    d = np.asarray(matrix.dist, dtype=np.float64)
    clusters: list[list[int]] = [[i] for i in range(S)]
    merges = []
    while len(clusters) > 1:
        best = None
        for a in range(len(clusters)):
            for b in range(a + 1, len(clusters)):
                h = float(d[np.ix_(clusters[a], clusters[b])].max())
                ka = min(labels[i] for i in clusters[a])
                kb = min(labels[i] for i in clusters[b])
                key = (h, min(ka, kb), max(ka, kb))
                if best is None or key < best[0]:
                    best = (key, a, b)
        (h, _, _), a, b = best
        ca, cb = clusters[a], clusters[b]
        if min(labels[i] for i in cb) < min(labels[i] for i in ca):
            ca, cb = cb, ca
        merges.append(
            Merge(tuple(labels[i] for i in ca), tuple(labels[i] for i in cb), h)
        )
        clusters = [c for k, c in enumerate(clusters) if k not in (a, b)] + [ca + cb]
    return DendrogramModel(tuple(labels), tuple(merges))


def cut_at_threshold(dendro: DendrogramModel, gamma: float) -> Partition:
    """Replay merges until the first one at height ``>= gamma`` and stop
    before it. With no such merge, everything ends in one cluster."""
    n = len(dendro.merges)
    for k, m in enumerate(dendro.merges):
        if m.height >= gamma:
            n = k
            break
    return dendro._replay(n)


def partition_at_k(dendro: DendrogramModel, k: int) -> Partition:
    S = len(dendro.labels)
    if not 1 <= k <= S:
        raise InvalidK(f"k must be in [1, {S}], got {k}")
    return dendro._replay(S - k)

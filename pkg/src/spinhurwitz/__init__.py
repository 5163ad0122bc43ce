"""Exact classical and spin Hurwitz numbers."""

from .hurwitz import ClassicalQuery, brute_force_hurwitz, classical_hurwitz
from .partitions import Partition, odd_partitions_of, partitions_of
from .spin import Parity, SpinEngine, SpinQuery, gt_local, normalize, spin_hurwitz, split_spin_hurwitz

__all__ = [
    "ClassicalQuery", "brute_force_hurwitz", "classical_hurwitz",
    "Partition", "odd_partitions_of", "partitions_of",
    "Parity", "SpinEngine", "SpinQuery", "gt_local", "normalize", "spin_hurwitz", "split_spin_hurwitz",
]

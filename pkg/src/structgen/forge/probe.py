"""Probe split: move most of the generalization set into training."""
from __future__ import annotations

import math
import random
from collections import defaultdict
from typing import Sequence

from .bundle import DatasetBundle, Instance, relabel


def _portion(n: int, fractions: Sequence[float]) -> tuple[int, int]:
    to_train = int(math.floor(fractions[0] * n + 0.5))
    to_dev = min(n - to_train, int(math.floor(fractions[1] * n + 0.5)))
    return to_train, to_dev


def make_probe_split(
    bundle: DatasetBundle[Instance],
    fractions: Sequence[float] = (0.60, 0.10, 0.30),
    seed: int = 0,
    *,
    stratified: bool = False,
) -> DatasetBundle[Instance]:
    """Send ``fractions[0]`` of gen to train and ``fractions[1]`` to dev.

    The remaining ``fractions[2]`` stays in the ``gen`` split as the probe
    test set.  Moved items keep their generalization label and their
    relative order; selection is uniform under ``seed`` (per type when
    ``stratified``).
    """
    if len(fractions) != 3 or any(f < 0 for f in fractions) or not math.isclose(sum(fractions), 1.0, abs_tol=1e-9):
        raise ValueError(f"fractions must be three non-negative numbers summing to 1, got {tuple(fractions)}")
    gen = bundle["gen"]
    rng = random.Random(seed)
    groups: dict[str, list[int]] = defaultdict(list)
    for i, inst in enumerate(gen):
        groups[inst.label if stratified else ""].append(i)
    train_idx: set[int] = set()
    dev_idx: set[int] = set()
    for key in sorted(groups):
        members = list(groups[key])
        rng.shuffle(members)
        a, b = _portion(len(members), fractions)
        train_idx.update(members[:a])
        dev_idx.update(members[a:a + b])
    moved_train = [gen[i] for i in sorted(train_idx)]
    moved_dev = [gen[i] for i in sorted(dev_idx)]
    rest = [g for i, g in enumerate(gen) if i not in train_idx and i not in dev_idx]
    return bundle.with_splits(
        name=f"{bundle.name}-probe",
        train=list(bundle["train"]) + relabel(moved_train, "train"),
        dev=list(bundle["dev"]) + relabel(moved_dev, "dev"),
        gen=rest,
    )

"""Deterministic random-number streams.

Every random draw in the package flows from one user-supplied seed through
a counter-based Philox generator. Streams are split by integer key paths
(for example ``(step, bootstrap_index, purpose)``), so each unit of work
owns an independent generator whose output does not depend on execution
order or worker count.
"""
from __future__ import annotations

import numpy as np

# Key-path namespaces. First path entry identifies the consumer; the
# remaining entries are consumer-specific (bootstrap index, grid cell, ...).
STEP1 = 1
STEP2 = 2
TUNING = 3
SIM_TRAIN = 4
SIM_VALID = 5
BENCH = 6

# Purpose tags within a bootstrap replicate.
ROWS = 0
SUBSET = 1


def stream(seed: int, *path: int) -> np.random.Generator:
    """Independent generator for ``seed`` and an integer key path."""
    ss = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in path))
    return np.random.Generator(np.random.Philox(ss))


def derive_seed(seed: int, *path: int) -> int:
    """Stable 63-bit sub-seed for handing to a nested component."""
    ss = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in path))
    return int(ss.generate_state(1, dtype=np.uint64)[0] >> 1)

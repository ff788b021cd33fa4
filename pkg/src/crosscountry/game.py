"""Single-player elimination game.

Actions are intermediate indices ``0 .. n_intermediates - 1``; the raw
per-step reward is the negated multiplication count of the elimination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .elimination import eliminate_vertex
from .errors import GraphAlreadyModified, InvalidConfig, LogOfNonNegative, MaskedAction
from .graph import CompGraph

SQRT_EPS = 1e-3


@dataclass(frozen=True)
class RewardScaler:
    kind: str = "sqrt_eps"
    epsilon: float = SQRT_EPS

    def __post_init__(self):
        if self.kind not in ("sqrt_eps", "log"):
            raise InvalidConfig(f"unknown scaler {self.kind!r}")
        if not self.epsilon > 0:
            raise InvalidConfig("epsilon must be positive")


def scale_return(r: float, scaler: RewardScaler = RewardScaler()) -> float:
    if scaler.kind == "log":
        if r >= 0:
            raise LogOfNonNegative(f"log scaling needs a negative return, got {r}")
        return -math.log(-r)
    return math.copysign(math.sqrt(abs(r) + 1.0) - 1.0, r) + scaler.epsilon * r


@dataclass
class GameState:
    graph: CompGraph
    tensor: np.ndarray
    mask: np.ndarray
    cumulative_mults: int = 0

    @property
    def done(self) -> bool:
        return not self.mask.any()

    def legal_actions(self) -> list[int]:
        return [int(a) for a in np.flatnonzero(self.mask)]


def reset(g: CompGraph) -> GameState:
    if not g.is_fresh:
        raise GraphAlreadyModified("reset needs a graph without eliminations")
    h = g.copy()
    return GameState(h, h.to_tensor(), np.ones(h.n_intermediates, dtype=bool), 0)


def step(s: GameState, action: int) -> tuple[GameState, float, bool]:
    """Eliminate intermediate ``action``; the input state is left untouched."""
    if not (0 <= action < len(s.mask)) or not s.mask[action]:
        raise MaskedAction(f"action {action} is not available")
    g = s.graph.copy()
    mults, _ = eliminate_vertex(g, g.n_inputs + action)
    mask = s.mask.copy()
    mask[action] = False
    new = GameState(g, g.to_tensor(), mask, s.cumulative_mults + mults)
    # every intermediate needs an explicit action, so the episode ends when the
    # mask empties, which coincides with bipartiteness
    return new, -float(mults), new.done


def reset_many(graphs: Sequence[CompGraph]) -> list[GameState]:
    return [reset(g) for g in graphs]


def step_many(states: Sequence[GameState], actions: Sequence[int]) -> list[tuple]:
    if len(states) != len(actions):
        raise InvalidConfig("states and actions differ in length")
    return [step(s, a) for s, a in zip(states, actions)]


def actions_to_order(g: CompGraph, actions: Sequence[int]) -> list[int]:
    return [g.n_inputs + a for a in actions]

"""Gameplay behaviour tree and game-state bookkeeping."""

from .game import ButtonPress, GameState, update_game_state
from .tree import (
    Action,
    ActionKind,
    HEAD_HOLD,
    HEAD_SCAN_BALL,
    HEAD_SCAN_GOAL,
    HEAD_TRACK,
    WorldSnapshot,
    tick,
)

__all__ = [
    "Action",
    "ActionKind",
    "ButtonPress",
    "GameState",
    "HEAD_HOLD",
    "HEAD_SCAN_BALL",
    "HEAD_SCAN_GOAL",
    "HEAD_TRACK",
    "WorldSnapshot",
    "tick",
    "update_game_state",
]

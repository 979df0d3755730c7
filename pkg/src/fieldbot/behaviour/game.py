"""Match-state tracking from game-controller packets and the chest button."""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace

from ..core import Config
from ..netcomm.protocol import GamePhase, GcPacket

log = logging.getLogger(__name__)


class ButtonPress:
    """Manual-mode chest button event."""


@dataclass(frozen=True)
class GameState:
    phase: GamePhase = GamePhase.INITIAL
    kickoff_ours: bool = False
    penalized: bool = False
    secs_remaining: float = 600.0

    @property
    def playing(self) -> bool:
        return self.phase is GamePhase.PLAYING and not self.penalized


def update_game_state(game: GameState, event, cfg: Config) -> GameState:
    """Apply one GC packet or button press; junk events are logged and
    ignored so a flaky referee box cannot take the robot down mid-match.
    """
    if isinstance(event, GcPacket):
        idx = cfg.i("net.robot_id") - 1
        penalized = False
        if 0 <= idx < len(event.penalties):
            penalized = event.penalties[idx] != 0
        return GameState(
            phase=event.phase,
            kickoff_ours=event.kickoff_team == cfg.i("net.team_id"),
            penalized=penalized,
            secs_remaining=float(event.secs_remaining),
        )
    if isinstance(event, ButtonPress):
        if game.phase is GamePhase.INITIAL:
            return replace(game, phase=GamePhase.PLAYING)
        return game
    log.warning("ignoring malformed game event: %r", event)
    return game

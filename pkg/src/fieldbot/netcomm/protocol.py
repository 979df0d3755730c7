"""Binary wire formats for team broadcast and game-controller packets.

Both packets are fixed-size little-endian records with a 4-byte ASCII
magic, zero-padded to their wire size.

Team message, 40 bytes, magic ``ESTM``::

    off  0  magic            4s
    off  4  protocol_version u8
    off  5  robot_id         u8
    off  6  pose x, y, theta 3 x f32   (field metres / radians)
    off 18  pose_confidence  f32       [0, 1]
    off 22  ball x, y        2 x f32   (field metres)
    off 30  ball_age_ms      u16
    off 32  fallen           u8
    off 33  timestamp_ms     u32       (sender clock)
    off 37  zero padding     3 bytes

Game-controller packet, 24 bytes, magic ``ESGC``::

    off  0  magic            4s
    off  4  phase            u8        (0..4, see GamePhase)
    off  5  kickoff_team     u8
    off  6  penalties        8 x u8    (entry i: robot id i+1; 0 = clear)
    off 14  secs_remaining   u16
    off 16  zero padding     8 bytes
"""

from __future__ import annotations

import enum
import math
import struct
from dataclasses import dataclass

PROTOCOL_VERSION = 1

TEAM_MAGIC = b"ESTM"
GC_MAGIC = b"ESGC"

_TEAM_STRUCT = struct.Struct("<4sBB6fHBI3x")
_GC_STRUCT = struct.Struct("<4sBB8sH8x")

TEAM_MESSAGE_SIZE = _TEAM_STRUCT.size   # 40
GC_PACKET_SIZE = _GC_STRUCT.size        # 24


class ProtocolError(ValueError):
    """Base class for wire-format failures."""


class ShortPacket(ProtocolError):
    pass


class BadMagic(ProtocolError):
    pass


class BadField(ProtocolError):
    pass


class UnknownPhase(ProtocolError):
    pass


class GamePhase(enum.IntEnum):
    INITIAL = 0
    READY = 1
    SET = 2
    PLAYING = 3
    FINISHED = 4


@dataclass(frozen=True)
class TeamMessage:
    robot_id: int
    pose: tuple[float, float, float]
    pose_confidence: float
    ball: tuple[float, float] = (0.0, 0.0)
    ball_age_ms: int = 0xFFFF          # saturated = never seen
    fallen: bool = False
    timestamp_ms: int = 0
    protocol_version: int = PROTOCOL_VERSION


@dataclass(frozen=True)
class GcPacket:
    phase: GamePhase
    kickoff_team: int
    penalties: bytes = b"\x00" * 8
    secs_remaining: int = 600


def _check_u8(name: str, v: int) -> None:
    if not 0 <= v < 256:
        raise BadField(f"{name} must fit a byte, got {v}")


def encode_team_message(msg: TeamMessage) -> bytes:
    _check_u8("robot_id", msg.robot_id)
    _check_u8("protocol_version", msg.protocol_version)
    if not 0.0 <= msg.pose_confidence <= 1.0:
        raise BadField(f"pose_confidence outside [0,1]: {msg.pose_confidence}")
    for v in (*msg.pose, *msg.ball):
        if not math.isfinite(v):
            raise BadField(f"non-finite float field: {v}")
    if not 0 <= msg.ball_age_ms <= 0xFFFF:
        raise BadField(f"ball_age_ms must fit u16, got {msg.ball_age_ms}")
    if not 0 <= msg.timestamp_ms <= 0xFFFFFFFF:
        raise BadField(f"timestamp_ms must fit u32, got {msg.timestamp_ms}")
    return _TEAM_STRUCT.pack(
        TEAM_MAGIC,
        msg.protocol_version,
        msg.robot_id,
        msg.pose[0],
        msg.pose[1],
        msg.pose[2],
        msg.pose_confidence,
        msg.ball[0],
        msg.ball[1],
        msg.ball_age_ms,
        1 if msg.fallen else 0,
        msg.timestamp_ms,
    )


def decode_team_message(data: bytes) -> TeamMessage:
    if len(data) != TEAM_MESSAGE_SIZE:
        raise ShortPacket(f"expected {TEAM_MESSAGE_SIZE} bytes, got {len(data)}")
    magic, version, robot_id, px, py, pt, conf, bx, by, age, fallen, ts = _TEAM_STRUCT.unpack(data)
    if magic != TEAM_MAGIC:
        raise BadMagic(f"bad magic {magic!r}")
    floats = (px, py, pt, conf, bx, by)
    if any(math.isnan(v) or math.isinf(v) for v in floats):
        raise BadField("NaN or infinite float field")
    if not 0.0 <= conf <= 1.0:
        raise BadField(f"pose_confidence outside [0,1]: {conf}")
    return TeamMessage(
        robot_id=robot_id,
        pose=(px, py, pt),
        pose_confidence=conf,
        ball=(bx, by),
        ball_age_ms=age,
        fallen=bool(fallen),
        timestamp_ms=ts,
        protocol_version=version,
    )


def encode_gc_packet(pkt: GcPacket) -> bytes:
    _check_u8("kickoff_team", pkt.kickoff_team)
    if len(pkt.penalties) != 8:
        raise BadField("penalties must be exactly 8 bytes")
    if not 0 <= pkt.secs_remaining <= 0xFFFF:
        raise BadField(f"secs_remaining must fit u16, got {pkt.secs_remaining}")
    return _GC_STRUCT.pack(
        GC_MAGIC, int(pkt.phase), pkt.kickoff_team, bytes(pkt.penalties), pkt.secs_remaining
    )


def decode_gc_packet(data: bytes) -> GcPacket:
    if len(data) != GC_PACKET_SIZE:
        raise ShortPacket(f"expected {GC_PACKET_SIZE} bytes, got {len(data)}")
    magic, phase, kickoff, penalties, secs = _GC_STRUCT.unpack(data)
    if magic != GC_MAGIC:
        raise BadMagic(f"bad magic {magic!r}")
    try:
        phase_val = GamePhase(phase)
    except ValueError:
        raise UnknownPhase(f"unknown phase byte 0x{phase:02x}") from None
    return GcPacket(phase=phase_val, kickoff_team=kickoff, penalties=penalties, secs_remaining=secs)

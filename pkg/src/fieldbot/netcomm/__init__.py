"""Team broadcast and game-controller UDP networking."""

from .protocol import (
    GC_MAGIC,
    GC_PACKET_SIZE,
    PROTOCOL_VERSION,
    TEAM_MAGIC,
    TEAM_MESSAGE_SIZE,
    BadField,
    BadMagic,
    GamePhase,
    GcPacket,
    ProtocolError,
    ShortPacket,
    TeamMessage,
    UnknownPhase,
    decode_gc_packet,
    decode_team_message,
    encode_gc_packet,
    encode_team_message,
)
from .service import CommsService, comms_service

__all__ = [
    "BadField",
    "BadMagic",
    "CommsService",
    "GC_MAGIC",
    "GC_PACKET_SIZE",
    "GamePhase",
    "GcPacket",
    "PROTOCOL_VERSION",
    "ProtocolError",
    "ShortPacket",
    "TEAM_MAGIC",
    "TEAM_MESSAGE_SIZE",
    "TeamMessage",
    "UnknownPhase",
    "comms_service",
    "decode_gc_packet",
    "decode_team_message",
    "encode_gc_packet",
    "encode_team_message",
]

"""UDP comms service: periodic team broadcast + team/GC listeners.

One sender timer and one receiver per socket run as daemon threads; all
shared state is exchanged as latest-value snapshots behind a short-held
lock, so queries never block on network traffic.  Malformed datagrams
are counted and dropped, never raised.
"""

from __future__ import annotations

import socket
import threading
import time

from ..core import Config, Pose2D
from ..estimation.team import TeammateReport
from .protocol import (
    GcPacket,
    ProtocolError,
    TeamMessage,
    decode_gc_packet,
    decode_team_message,
    encode_team_message,
)


class CommsService:
    def __init__(self, cfg: Config):
        self.cfg = cfg
        self.robot_id = cfg.i("net.robot_id")
        self.team_port = cfg.i("net.team_port")
        self.gc_port = cfg.i("net.gc_port")
        self.broadcast_addr = cfg.s("net.broadcast_addr")
        self.period_s = 1.0 / cfg.f("net.team_hz")
        self.max_age_s = cfg.f("net.max_report_age_s")

        self._lock = threading.Lock()
        self._own: TeamMessage | None = None
        self._reports: dict[int, tuple[TeamMessage, float]] = {}
        self._gc: tuple[GcPacket, float] | None = None
        self._rejected = 0
        self._stop = threading.Event()

        # bind failures propagate to the caller at startup
        self._team_sock = self._open_socket(self.team_port, broadcast=True)
        self._gc_sock = self._open_socket(self.gc_port, broadcast=False)

        self._threads = [
            threading.Thread(target=self._recv_team, name="comms-team-rx", daemon=True),
            threading.Thread(target=self._recv_gc, name="comms-gc-rx", daemon=True),
            threading.Thread(target=self._send_loop, name="comms-tx", daemon=True),
        ]
        for t in self._threads:
            t.start()

    @staticmethod
    def _open_socket(port: int, broadcast: bool) -> socket.socket:
        sock = socket.socket(socket.AF_INET, socket.SOCK_DGRAM)
        sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        if broadcast:
            sock.setsockopt(socket.SOL_SOCKET, socket.SO_BROADCAST, 1)
        sock.settimeout(0.2)
        sock.bind(("", port))
        return sock

    # thread bodies -----------------------------------------------------
    def _recv_team(self) -> None:
        while not self._stop.is_set():
            try:
                data, _ = self._team_sock.recvfrom(2048)
            except socket.timeout:
                continue
            except OSError:
                break
            try:
                msg = decode_team_message(data)
            except ProtocolError:
                with self._lock:
                    self._rejected += 1
                continue
            if msg.robot_id == self.robot_id:
                continue
            with self._lock:
                self._reports[msg.robot_id] = (msg, time.monotonic())

    def _recv_gc(self) -> None:
        while not self._stop.is_set():
            try:
                data, _ = self._gc_sock.recvfrom(2048)
            except socket.timeout:
                continue
            except OSError:
                break
            try:
                pkt = decode_gc_packet(data)
            except ProtocolError:
                with self._lock:
                    self._rejected += 1
                continue
            with self._lock:
                self._gc = (pkt, time.monotonic())

    def _send_loop(self) -> None:
        while not self._stop.wait(self.period_s):
            with self._lock:
                own = self._own
            if own is None:
                continue
            try:
                self._team_sock.sendto(
                    encode_team_message(own), (self.broadcast_addr, self.team_port)
                )
            except (OSError, ProtocolError):
                continue

    # queries (non-blocking) ---------------------------------------------
    def set_own_state(self, msg: TeamMessage) -> None:
        with self._lock:
            self._own = msg

    def latest_reports(self) -> dict[int, TeammateReport]:
        """Per-teammate latest report; ages use local receive time."""
        now = time.monotonic()
        out: dict[int, TeammateReport] = {}
        with self._lock:
            items = list(self._reports.items())
        for rid, (msg, recv_t) in items:
            age = now - recv_t
            if age >= self.max_age_s:
                continue
            ball = None
            if msg.ball_age_ms < 0xFFFF:
                ball = (msg.ball[0], msg.ball[1])
            out[rid] = TeammateReport(
                robot_id=rid,
                pose=Pose2D(*msg.pose),
                confidence=msg.pose_confidence,
                ball_field=ball,
                age_s=age,
            )
        return out

    def latest_gc(self) -> tuple[GcPacket, float] | None:
        """Most recent game-controller packet and its age in seconds."""
        with self._lock:
            gc = self._gc
        if gc is None:
            return None
        return (gc[0], time.monotonic() - gc[1])

    @property
    def rejected_count(self) -> int:
        with self._lock:
            return self._rejected

    def stop(self) -> None:
        self._stop.set()
        for sock in (self._team_sock, self._gc_sock):
            try:
                sock.close()
            except OSError:
                pass
        for t in self._threads:
            t.join(timeout=1.0)

    def __enter__(self) -> "CommsService":
        return self

    def __exit__(self, *exc) -> None:
        self.stop()


def comms_service(cfg: Config) -> CommsService:
    """Start and return a running comms service handle."""
    return CommsService(cfg)

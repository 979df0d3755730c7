"""Camera frame processing: ball, field lines and centre circle."""

from .ball import classify_ball
from .boundary import field_edge_filter, green_mask, white_mask
from .candidates import select_candidates
from .circle import detect_centre_circle, fit_circle
from .colour import rgb_to_hsv, rgb_to_yuyv_bytes, yuyv_to_hsv, yuyv_to_rgb
from .imageio import read_ppm, read_yuyv, write_ppm, write_yuyv
from .integral import build_integral
from .lines import detect_lines, hough_segments, merge_segments
from .pipeline import result_to_json, run_pipeline
from .types import (
    BallDetection,
    CameraFrame,
    Candidate,
    FieldBoundary,
    HsvImage,
    IntegralImage,
    LineSegment2D,
    VisionResult,
)

__all__ = [
    "BallDetection",
    "CameraFrame",
    "Candidate",
    "FieldBoundary",
    "HsvImage",
    "IntegralImage",
    "LineSegment2D",
    "VisionResult",
    "build_integral",
    "classify_ball",
    "detect_centre_circle",
    "detect_lines",
    "field_edge_filter",
    "fit_circle",
    "green_mask",
    "hough_segments",
    "merge_segments",
    "read_ppm",
    "read_yuyv",
    "result_to_json",
    "rgb_to_hsv",
    "rgb_to_yuyv_bytes",
    "run_pipeline",
    "select_candidates",
    "white_mask",
    "write_ppm",
    "write_yuyv",
    "yuyv_to_hsv",
    "yuyv_to_rgb",
]

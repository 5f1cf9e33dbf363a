"""k-frames and the quaternary forms that produce them."""
from .core import (Frame, four_squares, frame_general, frame_scale, frame_tilde,
                   frame_to_code, quaternion_matrix, tilde_code, tripling_frame,
                   verify_frame)
from .reps import (REGIMES, Representation, default_regime, regime_ok,
                   representation_basis, representation_count,
                   representation_count_direct, representation_lattice,
                   search_representation)

__all__ = [
    "Frame", "REGIMES", "Representation", "default_regime", "four_squares",
    "frame_general", "frame_scale", "frame_tilde", "frame_to_code", "quaternion_matrix",
    "regime_ok", "representation_basis", "representation_count",
    "representation_count_direct", "representation_lattice", "search_representation",
    "tilde_code", "tripling_frame", "verify_frame",
]

from ldseq.services.feasibility.engine import approx_llds_plus_3, ft3
from ldseq.services.feasibility.model import build_ft3_model, build_obstacle_model, require_ft3

__all__ = ["approx_llds_plus_3", "build_ft3_model", "build_obstacle_model", "ft3", "require_ft3"]

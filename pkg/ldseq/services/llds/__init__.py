from ldseq.services.llds.engine import compute_llds, llds_table

__all__ = ["compute_llds", "llds_table"]

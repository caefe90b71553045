"""
ldseq
Letter-duplicated subsequence algorithms: LLDS, Weighted-LDS, FT(3) and the hardness gadgets
"""
__version__ = "1.0.0"

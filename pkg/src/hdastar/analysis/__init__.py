from hdastar.analysis.model import ModelReport, model_overheads
from hdastar.analysis.metrics import divergence, premature_expansions
from hdastar.analysis.sparsity import sparsity_of

__all__ = [
    "ModelReport",
    "divergence",
    "model_overheads",
    "premature_expansions",
    "sparsity_of",
]

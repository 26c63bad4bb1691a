from .blowup import BlockCert, blowup, compose_equipartite, refine_blocks, verify_blocks
from .circulant import circulant_ham_decomp
from .haggkvist import haggkvist_double
from .projection import ProjectionInput, cn_factorize_blown, project, projection_factor
from .rowsum import RowSumMatrix, rsm_apply
from .walecki import walecki

__all__ = [
    "BlockCert",
    "ProjectionInput",
    "RowSumMatrix",
    "blowup",
    "circulant_ham_decomp",
    "cn_factorize_blown",
    "compose_equipartite",
    "haggkvist_double",
    "project",
    "projection_factor",
    "refine_blocks",
    "rsm_apply",
    "verify_blocks",
    "walecki",
]

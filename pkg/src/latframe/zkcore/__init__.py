from .code import (
    Type2Report,
    ZkCode,
    ZkMat,
    code_size,
    codeword_basis,
    crt_combine,
    crt_value,
    direct_sum,
    euclidean_weight,
    euclidean_weights,
    hamming_weight,
    iter_codewords,
    lift_hnf,
    self_dual_check,
    type2_check,
)
from .matrices import (
    Check,
    NegacirculantSpec,
    bordered_qr_matrix,
    circulant,
    four_block,
    four_block_generator,
    four_block_negacirculant,
    identity_plus,
    negacirculant,
    quadratic_residues,
    weighing_check,
)
from .minweight import min_hamming_weight_isd, min_weight_bruteforce
from .randcodes import random_self_dual_code

from .quat_core import AlgebraParams, OrderElement, QuatElement, find_params, make_params
from .ns_lattice import DivisorMatrix, gram_matrix, intersect, pullback
from .chern_map import audit_paper_basis, chern_matrix, kernel_basis

__all__ = ['AlgebraParams', 'OrderElement', 'QuatElement', 'find_params', 'make_params',
           'DivisorMatrix', 'gram_matrix', 'intersect', 'pullback',
           'audit_paper_basis', 'chern_matrix', 'kernel_basis']

"""
The algebra of signed quasisymmetric functions
==============================================

Graded dimensions, the stuffle product, the fundamental family and its
reduction to minimal chains, and P-partition enumerators of signed posets.
"""

import numpy as np

from sqsym import io
from sqsym.algebra import SqsExpr, dimension_series, truncate_expand
from sqsym.fundamental import FundamentalIndex, f_product, f_to_monomial, minimal_indices, reduce_to_minimal
from sqsym.posets import SignedPoset, gamma_enumerator, linear_extensions, natural_labeling

# dimensions of the graded pieces and their growth rate
dims = np.array(dimension_series(12))
print("dimensions:", dims.tolist())
print("ratios:", np.round(dims[1:] / dims[:-1], 4).tolist())
print("2 + sqrt(2) =", round(2 + np.sqrt(2), 4))

# a product of two monomial functions
f = SqsExpr.monomial(1, ((1, 0), (2, 1)))
g = SqsExpr.monomial(2, ((0, 3),))
print("\nproduct:", io.render_expr(f * g))

# a monomial function as a polynomial in x_-2 .. x_2
small = SqsExpr.monomial(0, ((1, 0),))
print("M[0;(1,0)] truncated to 5 variables:", truncate_expand(small, 2))

# fundamental functions and the shuffle product
a = FundamentalIndex.of({1}, "-+")
b = FundamentalIndex.of({0}, "++")
res = f_product(a, b, pi=(2, 1), pi2=(-1, 2))
print("\nF product:", io.render_fcomb(res.terms))
print("expansion matches:", f_to_monomial(a) * f_to_monomial(b) == sum((f_to_monomial(fi) * c for fi, c in res.terms.items()), SqsExpr()))

# non-minimal chains rewrite over minimal ones
print("\nminimal indices of degree 2:", len(minimal_indices(2)))
print("F[d=1; S={}; eps=-] =", io.render_fcomb(reduce_to_minimal(FundamentalIndex.of((), "-"))))

# a signed poset and its linear extensions
p = SignedPoset(2, frozenset({(-1, 1), (1, 2)}))
w = natural_labeling(p)
print("\nlinear extensions:", linear_extensions(p))
print("gamma:", io.render_expr(gamma_enumerator(p, w)))

# %% [markdown]
# # Degree-bounded invariant rings
#
# For a quiver with every nonframed arrow carrying a generic upper-triangular
# n x n matrix, we solve for all polynomials of degree <= d killed by the
# infinitesimal unipotent action. The answer is exact (integer elimination),
# but only ever claims something up to the stated degree.

# %%
from math import comb

from filtquiv.filtrep import RepConfig, build_general_rep, is_invariant
from filtquiv.invariants import invariant_basis, verify_theorem1
from filtquiv.polyring import Polynomial, coord
from filtquiv.quiver import make_family

# %%
# When no vertex pair has three pathways, the invariants are exactly the
# polynomials in the diagonal entries: C(n*|arrows| + d, d) of them.
q = make_family("ADE", "D", 4, orientation="alternating")
r = verify_theorem1(q, 3, 2)
print(r.outcome, r.kernel.dims, r.kernel.dim, comb(3 * 3 + 2, 2), r.verdict)

# %%
# With two loops the kernel grows past the diagonal part already in degree 2.
j2 = make_family("Jordan", 2)
r = verify_theorem1(j2, 2, 2)
print(r.outcome, r.kernel.dims, "diagonal:", r.diagonal_dim, r.comparison.verdict)
print("witness:", r.witness)


# %%
def v(a, i, j):
    return Polynomial.var(coord(a, i, j))


# The same invariant written by hand, checked two ways (derivations and
# one-parameter substitution).
f = (v("a1", 1, 1) - v("a1", 2, 2)) * v("a2", 1, 2) - (v("a2", 1, 1) - v("a2", 2, 2)) * v("a1", 1, 2)
rep = build_general_rep(RepConfig(j2, 2))
print(is_invariant(rep, f), f)

# %%
# Kernel bases print in a canonical text form.
for g in invariant_basis(build_general_rep(RepConfig(make_family("ADE", "A", 2), 2)), 1).basis:
    print(g)

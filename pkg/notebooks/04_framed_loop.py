# %% [markdown]
# # Where the framed generators fall short
#
# Frame a single vertex carrying one loop, with n = 2 and m = 1. The row
# generators can only be `(2 | 1)` on `A_0` and on `A_1 A_0`, i.e. `x21`
# and `a22 * x21`, so everything they generate lives in
# `Q[a11, a22, x21]`. The invariant kernel is bigger from degree 2 on.

# %%
from filtquiv.filtrep import RepConfig, build_general_rep, is_invariant
from filtquiv.invariants import verify_theorem2
from filtquiv.polyring import Polynomial, coord
from filtquiv.quiver import FramedQuiver, make_family

fq = FramedQuiver(make_family("Jordan", 1))
for d in range(4):
    r = verify_theorem2(fq, 2, 1, d)
    print(d, r.kernel.dims, r.verdict, r.comparison.witness)


# %%
def v(a, i, j):
    return Polynomial.var(coord(a, i, j))


# The missing invariant. Under x11 -> x11 + u x21 and
# a12 -> a12 + u (a22 - a11) it is unchanged.
h = (v("a1", 2, 2) - v("a1", 1, 1)) * v("a0", 1, 1) - v("a1", 1, 2) * v("a0", 2, 1)
rep = build_general_rep(RepConfig(fq, 2, 1))
print(is_invariant(rep, h))

# %%
# h times x21 is, up to sign, the 2 x 2 determinant of the two columns
# A_1 A_0 and A_0 side by side: a minor that mixes two path products,
# which no single-label row can produce.
M = [[v("a1", 1, 1) * v("a0", 1, 1) + v("a1", 1, 2) * v("a0", 2, 1), v("a0", 1, 1)],
     [v("a1", 2, 2) * v("a0", 2, 1), v("a0", 2, 1)]]
mixed = M[0][0] * M[1][1] - M[0][1] * M[1][0]
print(mixed == -h * v("a0", 2, 1))

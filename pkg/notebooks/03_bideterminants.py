# %% [markdown]
# # Bitableaux on framed quivers
#
# A row `(j1 .. jk | i1 .. ik)@[phi1, .., 0]` is a k x k minor of the path
# product `A_phi1 ... A_0`, where `A_0` is the n x m framing matrix. A
# bitableau multiplies its rows.

# %%
from filtquiv.filtrep import RepConfig, build_general_rep, is_invariant
from filtquiv.quiver import FramedQuiver, make_family
from filtquiv.tableaux import (
    Bitableau,
    block_standard_terms,
    enumerate_row_generators,
    eval_bideterminant,
    grosshans_basis_check,
    is_block_standard,
    lemma48_check,
)

# %%
fq = FramedQuiver(make_family("EquiorientedA", 1))
rep = build_general_rep(RepConfig(fq, 2, 2))
bt = Bitableau.from_text("(2 | 1)@[0]\n(2 | 2)@[0]\n(1 2 | 1 2)@[1,0]\n(2 | 1)@[1,0]")
print(is_block_standard(bt))
print(eval_bideterminant(bt, rep))

# %%
# Row generators use suffix rows p..n only; each is invariant.
rows = enumerate_row_generators(fq, rep, 2, 2)
for row in rows:
    f = eval_bideterminant(Bitableau((row,)), rep)
    print(row, is_invariant(rep, f))

# %%
# Suffix minors of b X pick up the product of the bottom diagonal entries of b.
print(all(lemma48_check(n, m, p) for n in (1, 2, 3) for m in (1, 2, 3) for p in range(1, n + 1) if n - p + 1 <= m))

# %%
# Standard bideterminants on a generic 2 x 3 matrix are a basis in degree <= 2.
print(grosshans_basis_check(2, 3, 2).to_json())

# %%
# The full generator list: diagonal monomials times block-standard products.
terms = block_standard_terms(fq, rep, 2)
print(len(terms))
for t in terms[:8]:
    print([str(r) for r in t.bitableau.rows], t.poly)

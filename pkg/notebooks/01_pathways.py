# %% [markdown]
# # Pathways and the two-pathway test
#
# A pathway is a composable arrow word with no immediately repeated block
# (no factor of the form `q q`). Paths are written right to left, so `a2a1`
# means "first a1, then a2". Trivial paths count.

# %%
from filtquiv.quiver import Quiver, classify, enumerate_pathways, make_family

# %%
# A cyclic 2-cycle has exactly two pathways between every pair of vertices.
cyc = Quiver.from_edges([(1, 2), (2, 1)], name="cyc")
report = enumerate_pathways(cyc)
for (i, j), paths in report.pathways.items():
    print(i, "->", j, [str(p) for p in paths])

# %%
# Two loops at one vertex: the search stops as soon as a third pathway shows up.
j2 = classify(make_family("Jordan", 2))
print(j2.outcome, j2.pair, [str(w) for w in j2.witnesses])

# %%
# Three parallel arrows give three length-one pathways from 1 to 2.
triple = classify(Quiver.from_edges([(1, 2)] * 3))
print(triple.outcome, triple.pair, [str(w) for w in triple.witnesses])

# %%
# Every Dynkin and affine Dynkin family, in any orientation, stays below three.
families = [
    ("ADE", "E", 8),
    ("AffineADE", "D", 5),
    ("AffineADE", "E", 7),
    ("Star", [2, 2, 1]),
    ("Comet", [1, 1, 1]),
]
for args in families:
    print(args, classify(make_family(*args)).outcome)

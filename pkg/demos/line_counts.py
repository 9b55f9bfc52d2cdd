"""Counting maps from a general curve to the projective line.

For a general genus-g curve with n = 2d - g + 1 marked points, the number
of degree-d maps to P^1 taking the marks to general points is computed two
ways: a binomial closed form, and a Schubert-calculus integral on the
Grassmannian Gr(2, d+1).
"""

from tevdeg import CPS_VS_SCHUBERT_DISCREPANCIES, tev_p1_cps, tev_p1_schubert

# The famous stable value: once d >= g + 1, the count is exactly 2^g.
print("the 2^g phenomenon (rows: g, columns: d = g+1, g+2, g+3)")
for g in range(9):
    row = [tev_p1_schubert(g, d) for d in range(g + 1, g + 4)]
    print(f"  g={g}: {row}")

# At d = g the count drops below 2^g ...
print()
print("at d = g the count is 2^g - g - 1:")
for g in range(2, 9):
    print(f"  g={g}: {tev_p1_schubert(g, g)} (2^g - g - 1 = {2**g - g - 1})")

# ... and both routes still agree there.
print()
print("route agreement for g <= 10, g <= d <= g+3:", all(
    tev_p1_cps(g, d) == tev_p1_schubert(g, d)
    for g in range(11)
    for d in range(max(g, 1), g + 4)
))

# Below d = g the two formulas part ways.  The Schubert integral matches
# direct pencil counts -- e.g. a general genus-4 curve carries exactly two
# degree-3 pencils, and genus 6 carries five degree-4 ones -- so it is the
# oracle of record; the binomial formula's transcription overshoots there.
print()
print("where the binomial formula disagrees (d < g):  g d cps schubert")
for g, d, cps, sch in CPS_VS_SCHUBERT_DISCREPANCIES:
    print(f"  {g} {d} {cps} {sch}")

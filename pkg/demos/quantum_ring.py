"""Counts for projective space out of the small quantum ring.

QH*(P^r) is the polynomial ring on the hyperplane class h with the single
quantum relation h^{r+1} = q.  Expanding powers of the point class P = h^r
against the quantum Euler class E recovers the same counts as the
geometric routes.
"""

from tevdeg import QPolyClass, qmul, quantum_euler, vtev_projective_qh

r = 2
h = QPolyClass.h_power

# The relation in action: on P^2, h^2 * h^2 wraps around to q h.
print(f"on P^{r}:  h^2 * h^2 = {qmul(h(r, 2), h(r, 2))}")

# The quantum Euler class is the sum over dual basis pairs; for P^r every
# pair multiplies to the point class, giving (r+1) h^r.
for rr in (1, 2, 5):
    print(f"quantum Euler class of P^{rr}: {quantum_euler(rr)}")

# The count: coefficient of q^d P in P^{*n} * E^{*g}.  With the matching
# number of marks n = (r+1) d / r - g + 1 it equals (r+1)^g; any other n
# misses the grading and gives zero.
g, d = 2, 2
n = (r + 1) * d // r - g + 1
print(f"\n(g, d, r) = {(g, d, r)}, matching n = {n}")
print(f"  count at n     = {vtev_projective_qh(g, d, r, n)}   (expected (r+1)^g = {(r + 1) ** g})")
print(f"  count at n + 1 = {vtev_projective_qh(g, d, r, n + 1)}")
print(f"  count at n - 1 = {vtev_projective_qh(g, d, r, n - 1)}")

# The identity holds across the whole grid r <= 6, g <= 6, d <= 4r.
ok = all(
    vtev_projective_qh(g, d, r, (r + 1) * d // r - g + 1) == (r + 1) ** g
    for r in range(1, 7)
    for g in range(7)
    for d in range(r, 4 * r + 1, r)
    if (r + 1) * d // r - g + 1 >= max(1, 3 - 2 * g)
)
print(f"\nidentity on the full grid: {ok}")

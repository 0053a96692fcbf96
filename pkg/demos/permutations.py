"""Pattern-avoiding permutations, their two Dyck-path encodings and the composite map.

    python3 demos/permutations.py
"""

from collections import Counter

from tunnelkit import perms
from tunnelkit.stats import tunnel_counts_at, valleys

pi = perms.parse_perm("67435281")
D = perms.kra(pi)
s = perms.stats(pi)
at, _, right = tunnel_counts_at(D, 0)
print(f"kra({pi}) = {D.word}")
print(f"  fixed points {s.fp} = centered tunnels {at}")
print(f"  excedances   {s.exc} = right tunnels {right}")
print(f"  descents     {s.des} = valleys {valleys(D)}")

sigma = perms.parse_perm("23147586")
E = perms.rs(sigma)
print()
print(f"rs({sigma}) = {E.word}")
fixed = [i for i in range(1, len(sigma) + 1) if sigma[i] == i]
print(f"  fixed points {fixed} -> hills at x = {[2 * i - 1 for i in fixed]}")

n, r = 6, 2
src = perms.avoiders(n, "132")
print()
print(f"composite rs^-1 . phi_{r} . kra on S_{n}(132):")
print("  alpha_r distribution over S_n(132):", sorted(Counter(perms.alpha(p, r) for p in src).items()))
print("  beta_r distribution of the images: ", sorted(Counter(perms.beta(perms.composite(p, r), r) for p in src).items()))
print("  beta_r distribution over S_n(321): ", sorted(Counter(perms.beta(p, r) for p in perms.avoiders(n, "321")).items()))

"""Closed-form generating functions expanded exactly and compared with enumeration.

    python3 demos/generating_functions.py
"""

from tunnelkit.series import brute_force_gf, gf

N = 4
G = gf.gf_G_tilde(N)
print("centered (x), left (u), right (v) tunnels and centered multitunnels (w):")
for k in range(N + 1):
    print(f"  z^{k}: {G[k]}")
brute = brute_force_gf("dyck", {"x": "ct", "u": "lt", "v": "rt", "w": "cmt"}, N)
print(f"  equals the sum over all paths: {G == brute}")

print()
L = gf.gf_L(N)
print("fixed points (x), excedances (v), descents + 1 (p) over 132-avoiders:")
print(" ", L)
print(f"  same series through the quadratic for K: {L == gf.gf_L_via_K1(N)}")

print()
F = gf.gf_F(N)
counts = [F.subs({c: 1 for c in "tuvwy"})[k] for k in range(N + 1)]
print("F at all markers 1 counts pairs (D, r) with 0 <= r <= n:", ", ".join(map(str, counts)))

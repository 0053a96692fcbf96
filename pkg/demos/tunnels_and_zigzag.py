"""Tunnels of a Dyck path and how the zigzag map turns them into hills and rises.

    python3 demos/tunnels_and_zigzag.py
"""

from tunnelkit import parse, phi, phi_inverse, profile, tunnels
from tunnelkit.zigzag import sigma_r, trace_phi_r

D = parse("uuduudududddud")
print(f"path      {D.word}   (semilength {D.n})")
print()
print("tunnels (up step, down step, midpoint x):")
for t in sorted(tunnels(D), key=lambda t: t.up_position):
    side = "centered" if t.midpoint_x == D.n else ("left" if t.midpoint_x < D.n else "right")
    print(f"  u{t.up_position:<3} d{t.down_position:<3} x={t.midpoint_x:<3} {side}")

print()
print("reading order:", " ".join(map(str, sigma_r(D.n, 0).order)))
print("visit log (a step opens a tunnel unless its partner was already read):")
for i, k, kind in trace_phi_r(D):
    print(f"  {i:>2}: step {k:>2} {kind}")

E = phi(D)
print()
print(f"phi(D)    {E.word}")
before, after = profile(D), profile(E)
print(f"  centered tunnels {before.ct} -> hills {after.hills}")
print(f"  right tunnels    {before.rt} -> even rises {after.even_rises}")
print(f"  lt + ct          {before.lt + before.ct} -> odd rises {after.odd_rises}")
print(f"  centered multitunnels {before.cmt} -> returns {after.returns}")
print(f"  peaks {before.peaks} -> occurrences of u?d in phi(D)d: {after.oc}")
print()
print(f"inverse recovers the path: {phi_inverse(E).word == D.word}")

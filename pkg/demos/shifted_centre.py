"""Moving the centre line: phi_r classifies tunnels against x = n + r.

    python3 demos/shifted_centre.py
"""

from tunnelkit import parse
from tunnelkit.stats import cmt_at, region_stats, tunnel_counts_at
from tunnelkit.zigzag import build_labeled_word, phi_r, phi_r_inverse

D = parse("uduuduuduududddudd")
print(f"path {D.word}, n = {D.n}")
print()
print(" r  image               at  right  <=  cmt | hills>2r  even>2r  odd>2r+ups<=2r  arches>=2r")
for r in range(D.n + 1):
    E = phi_r(D, r)
    at, le, right = tunnel_counts_at(D, r)
    reg = region_stats(E, r)
    print(
        f"{r:>2}  {E.word}  {at:>2}  {right:>5}  {le:>2}  {cmt_at(D, r):>3} |"
        f" {reg.hills_gt_2r:>8}  {reg.even_rises_gt_2r:>7}  {reg.odd_rises_gt_2r + reg.upsteps_le_2r:>14}"
        f"  {reg.arches_ge_2r:>10}"
    )

r = 2
E = phi_r(D, r)
lw = build_labeled_word(E, r)
print()
print(f"inverting phi_{r}: o/c word split after position {lw.split}")
print("  ", " ".join(lw.symbols))
print("  ", " ".join(str(x) for x in lw.labels))
print(f"  recovered {phi_r_inverse(E, r).word}")

"""Verification suites: every identity checked exhaustively or coefficientwise.

Each suite returns a :class:`VerificationReport`.  Reports are deterministic
for fixed parameters apart from the ``elapsed`` field.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from . import perms
from .dyck import DyckPath, catalan, enumerate_paths
from .errors import UnknownSuite
from .series import gf
from .series.brute import brute_force_gf
from .series.poly import MultiPoly
from .series.series import TruncatedSeries
from .stats import (
    cmt_at,
    hills,
    odd_even_rises,
    peaks,
    region_stats,
    returns_and_arches,
    tunnel_counts_at,
    u_star_d,
    valleys,
)
from .zigzag import phi, phi_r, phi_r_inverse

__all__ = ["VerificationReport", "SUITES", "SUITE_ALIASES", "run_suite", "dyck_factorizations", "L_REFERENCE_PREFIX"]

MAX_FAILURES_KEPT = 50

# reference expansion of L, z^0 .. z^3
L_REFERENCE_PREFIX = (
    "1",
    "xp",
    "vp^2 + x^2p",
    "v^2p^2 + vp^2 + xvp^3 + xvp^2 + x^3p",
)


@dataclass
class VerificationReport:
    suite: str
    parameters: dict
    checks_run: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    failure_count: int = 0
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def check(self, condition: bool, what, expected, actual) -> None:
        self.checks_run += 1
        if not condition:
            self.failure_count += 1
            if len(self.failures) < MAX_FAILURES_KEPT:
                self.failures.append((str(what), str(expected), str(actual)))

    def merge(self, other: VerificationReport) -> None:
        self.checks_run += other.checks_run
        self.failure_count += other.failure_count
        room = MAX_FAILURES_KEPT - len(self.failures)
        self.failures.extend((f"{other.suite}: {a}", b, c) for a, b, c in other.failures[:room])

    def to_dict(self, include_elapsed: bool = True) -> dict:
        data = {
            "suite": self.suite,
            "parameters": self.parameters,
            "checks_run": self.checks_run,
            "failure_count": self.failure_count,
            "failures": [list(f) for f in self.failures],
            "status": "ok" if self.ok else "FAILED",
        }
        if include_elapsed:
            data["elapsed"] = round(self.elapsed, 3)
        return data

    def to_json(self, include_elapsed: bool = True) -> str:
        return json.dumps(self.to_dict(include_elapsed), sort_keys=True)

    def to_text(self, include_elapsed: bool = True) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        lines = [f"suite {self.suite} [{params}]: {self.checks_run} checks, {self.failure_count} failures"]
        for what, exp, act in self.failures:
            lines.append(f"  FAIL {what}: expected {exp}, got {act}")
        if include_elapsed:
            lines.append(f"  elapsed {self.elapsed:.3f}s")
        return "\n".join(lines)


def _paths(max_n: int, min_n: int = 0):
    for n in range(min_n, max_n + 1):
        yield from enumerate_paths(n, override=True)


def dyck_factorizations(D: DyckPath):
    """All ``(a, b)`` with ``D[a:b]`` a (possibly empty) Dyck factor."""
    h = D.heights()
    m = len(D.word)
    for a in range(m + 1):
        yield a, a
        for b in range(a + 1, m + 1):
            if h[b] < h[a]:
                break
            if h[b] == h[a]:
                yield a, b


# Dyck-path suites


def suite_tunnel_rises(max_n: int = 10, **_) -> VerificationReport:
    rep = VerificationReport("tunnel-rises", {"max_n": max_n})
    for D in _paths(max_n):
        E = phi(D)
        at, le, right = tunnel_counts_at(D, 0)
        odr, er = odd_even_rises(E)
        expected = (at, right, le, cmt_at(D, 0))
        actual = (hills(E), er, odr, returns_and_arches(E))
        rep.check(expected == actual, D.word, expected, actual)
    return rep


def suite_regions(max_n: int = 8, max_r: int | None = None, **_) -> VerificationReport:
    rep = VerificationReport("regions", {"max_n": max_n, "max_r": max_r})
    for D in _paths(max_n):
        top = D.n if max_r is None else min(D.n, max_r)
        for r in range(top + 1):
            E = phi_r(D, r)
            at, le, right = tunnel_counts_at(D, r)
            rs_ = region_stats(E, r)
            expected = (at, right, le, cmt_at(D, r))
            actual = (rs_.hills_gt_2r, rs_.even_rises_gt_2r, rs_.odd_rises_gt_2r + rs_.upsteps_le_2r, rs_.arches_ge_2r)
            rep.check(expected == actual, f"{D.word} r={r}", expected, actual)
    return rep


def _concat(rep: VerificationReport, max_n: int, rs_allowed) -> VerificationReport:
    for D in _paths(max_n):
        w = D.word
        m = len(w)
        for a, b in dyck_factorizations(D):
            diff = a - (m - b)
            if diff < 0 or diff % 2 or diff // 2 not in rs_allowed:
                continue
            r = diff // 2
            outer = DyckPath(w[:a] + w[b:])
            inner = DyckPath(w[a:b])
            lhs = phi_r(D, r)
            rhs = phi_r(outer, r).word + phi(inner).word
            rep.check(lhs.word == rhs, f"{w} A={w[:a]!r} B={w[a:b]!r} r={r}", rhs, lhs.word)
    return rep


def suite_concat(max_n: int = 8, **_) -> VerificationReport:
    return _concat(VerificationReport("concat", {"max_n": max_n}), max_n, {0})


def suite_concat_r(max_n: int = 8, max_r: int | None = 3, **_) -> VerificationReport:
    max_r = 3 if max_r is None else max_r
    return _concat(VerificationReport("concat-r", {"max_n": max_n, "max_r": max_r}), max_n, set(range(max_r + 1)))


def suite_bijectivity(max_n: int = 10, max_r: int | None = None, **_) -> VerificationReport:
    rep = VerificationReport("bijectivity", {"max_n": max_n, "max_r": max_r})
    for n in range(max_n + 1):
        top = n if max_r is None else min(n, max_r)
        for r in range(top + 1):
            images = set()
            for D in enumerate_paths(n, override=True):
                E = phi_r(D, r)
                images.add(E.word)
                back = phi_r_inverse(E, r)
                rep.check(back == D, f"{D.word} r={r}", D.word, back.word)
            rep.check(len(images) == catalan(n), f"image size n={n} r={r}", catalan(n), len(images))
    return rep


def suite_peaks(max_n: int = 10, **_) -> VerificationReport:
    rep = VerificationReport("peak-transport", {"max_n": max_n})
    for D in _paths(max_n):
        oc = u_star_d(phi(D))[1]
        rep.check(peaks(D) == oc, D.word, peaks(D), oc)
    return rep


# permutation suites


def suite_rs(max_n: int = 8, **_) -> VerificationReport:
    rep = VerificationReport("rs", {"max_n": max_n})
    for n in range(max_n + 1):
        perms_321 = set()
        for D in enumerate_paths(n, override=True):
            pi = perms.rs_inverse(D)
            perms_321.add(pi)
            rep.check(perms.avoids(pi, (3, 2, 1)) if n >= 3 else True, f"rs_inverse({D.word}) avoids 321", True, pi)
            rep.check(perms.rs(pi) == D, f"rs(rs_inverse({D.word}))", D.word, perms.rs(pi).word)
            fixed = {i for i in range(1, n + 1) if pi[i] == i}
            hill_x = {2 * i - 1 for i in fixed}
            h = D.heights()
            tops = {x for x in range(1, 2 * n) if D.word[x - 1:x + 1] == "ud" and h[x] == 1}
            rep.check(hill_x == tops, f"fixed points of {pi} vs hills of {D.word}", sorted(hill_x), sorted(tops))
        rep.check(len(perms_321) == catalan(n), f"|S_{n}(321)| via rs_inverse", catalan(n), len(perms_321))
    return rep


def suite_kra(max_n: int = 8, **_) -> VerificationReport:
    rep = VerificationReport("kra", {"max_n": max_n})
    for n in range(max_n + 1):
        seen = set()
        for D in enumerate_paths(n, override=True):
            pi = perms.kra_inverse(D)
            seen.add(pi)
            rep.check(perms.kra(pi) == D, f"kra(kra_inverse({D.word}))", D.word, perms.kra(pi).word)
            st = perms.stats(pi)
            at, le, right = tunnel_counts_at(D, 0)
            rep.check((st.fp, st.exc, st.des) == (at, right, valleys(D)), f"{pi} -> {D.word}", (st.fp, st.exc, st.des), (at, right, valleys(D)))
            for r in range(n + 1):
                a = perms.alpha(pi, r)
                got = tunnel_counts_at(D, r)[0]
                rep.check(a == got, f"alpha_{r}({pi}) vs tunnels at n+r", a, got)
        rep.check(len(seen) == catalan(n), f"|S_{n}(132)| via kra_inverse", catalan(n), len(seen))
    return rep


def _avoider_sets(n: int, naive_limit: int = 8):
    method = "naive" if n <= naive_limit else "fast"
    return (perms.avoiders(n, (3, 2, 1), method=method, override=True),
            perms.avoiders(n, (1, 3, 2), method=method, override=True))


def suite_alpha_beta(max_n: int = 8, max_r: int | None = None, **_) -> VerificationReport:
    rep = VerificationReport("alpha-beta", {"max_n": max_n, "max_r": max_r})
    for n in range(max_n + 1):
        s321, s132 = _avoider_sets(n)
        top = n if max_r is None else min(n, max_r)
        for r in range(top + 1):
            images = set()
            for pi in s132:
                img = perms.composite(pi, r)
                images.add(img)
                rep.check(perms.beta(img, r) == perms.alpha(pi, r), f"composite({pi}, r={r}) = {img}", perms.alpha(pi, r), perms.beta(img, r))
            rep.check(images == set(s321), f"composite onto S_{n}(321), r={r}", len(s321), len(images))
            d132 = Counter(perms.alpha(pi, r) for pi in s132)
            d321 = Counter(perms.beta(pi, r) for pi in s321)
            rep.check(d132 == d321, f"alpha_{r} vs beta_{r} distribution n={n}", sorted(d132.items()), sorted(d321.items()))
    return rep


def suite_fp_exc(max_n: int = 8, order: int = 8, **_) -> VerificationReport:
    rep = VerificationReport("fp-exc", {"max_n": max_n, "order": order})
    for n in range(max_n + 1):
        s321, s132 = _avoider_sets(n)
        d321 = Counter((perms.stats(p).fp, perms.stats(p).exc) for p in s321)
        d132 = Counter((perms.stats(p).fp, perms.stats(p).exc) for p in s132)
        rep.check(d321 == d132, f"(fp, exc) joint distribution n={n}", sorted(d321.items()), sorted(d132.items()))
    closed = gf.gf_fpexc132(order)
    brute = brute_force_gf("s132", {"x": "fp", "v": "exc"}, order)
    _series_check(rep, "fp/exc closed form vs S_n(132)", closed, brute)
    tilde = gf.gf_G_tilde(order).subs({"u": 1, "w": 1})
    _series_check(rep, "fp/exc closed form vs G-tilde at u=w=1", closed, tilde)
    return rep


# series suites


def _series_check(rep: VerificationReport, what: str, expected: TruncatedSeries, actual: TruncatedSeries) -> None:
    n = min(expected.order, actual.order)
    for k in range(n + 1):
        rep.check(expected[k] == actual[k], f"{what} [z^{k}]", expected[k], actual[k])


def suite_gf_G(order: int = 8, **_) -> VerificationReport:
    N = order
    rep = VerificationReport("gf-G", {"order": N})
    one = TruncatedSeries.one(N)
    tilde = gf.gf_G_tilde(N)
    brute = brute_force_gf("dyck", {"x": "ct", "u": "lt", "v": "rt", "w": "cmt"}, N)
    _series_check(rep, "G-tilde closed form vs brute force", brute, tilde)
    G = gf.gf_G(N)
    brute_G = brute_force_gf("dyck", {"t": "hills", "u": "odr", "v": "er", "w": "returns"}, N)
    _series_check(rep, "G closed form vs brute force", brute_G, G)
    G1 = G.subs({"t": 1, "w": 1})
    H1 = G1.swap("u", "v")
    u, w, t = (MultiPoly.var(c) for c in "uwt")
    rhs = one + ((H1 - 1 + t) * G).shift(1).truncate(N).scale(u * w)
    _series_check(rep, "functional equation for G", G, rhs)
    _series_check(rep, "G1 = 1 + uz H1 G1", G1, one + (H1 * G1).shift(1).truncate(N).scale(u))
    _series_check(rep, "H1 = 1 + vz G1 H1", H1, one + (G1 * H1).shift(1).truncate(N).scale(MultiPoly.var("v")))
    _series_check(rep, "H1 closed form", H1, gf.gf_H1_closed(N))
    _series_check(rep, "G-tilde at x=u=v=w=1 is Catalan", gf.gf_catalan(N), tilde.subs({c: 1 for c in "xuvw"}))
    _series_check(rep, "G(t,u,v,w) = G-tilde(tu,u,v,w)", G, tilde.subs({"x": t * u}))
    return rep


def suite_gf_F(order: int = 7, **_) -> VerificationReport:
    N = order
    rep = VerificationReport("gf-F", {"order": N})
    F = gf.gf_F(N)
    F_closed = gf.gf_F_closed(N)
    _series_check(rep, "F product form vs radical form", F, F_closed)
    brute = brute_force_gf(
        "dyck_r", {"t": "tunnels_at", "u": "tunnels_le", "v": "tunnels_gt", "w": "cmt_at", "y": "r"}, N
    )
    _series_check(rep, "F vs brute force over (D, r)", brute, F)
    via_regions = brute_force_gf(
        "dyck_r",
        {
            "t": "hills_gt_2r",
            "u": lambda Dr: region_stats(*Dr).odd_rises_gt_2r + region_stats(*Dr).upsteps_le_2r,
            "v": "even_rises_gt_2r",
            "w": "arches_ge_2r",
            "y": "r",
        },
        N,
    )
    _series_check(rep, "F vs region statistics of the paths themselves", via_regions, F)
    ones = F.subs({c: 1 for c in "tuvwy"})
    expected = TruncatedSeries([(n + 1) * catalan(n) for n in range(N + 1)], N)
    _series_check(rep, "F at t=u=v=w=y=1 is (n+1) C_n", expected, ones)
    r0 = brute_force_gf("dyck", {"t": "ct", "u": lambda D: tunnel_counts_at(D, 0)[1], "v": "rt", "w": "cmt"}, N)
    _series_check(rep, "F at y=0 is the r=0 marginal", r0, F.subs({"y": 0}))
    _series_check(rep, "F at y=0 equals G", gf.gf_G(N), F.subs({"y": 0}))
    return rep


def suite_gf_L(order: int = 8, **_) -> VerificationReport:
    N = order
    rep = VerificationReport("gf-L", {"order": N})
    L = gf.gf_L(N)
    for k, text in enumerate(L_REFERENCE_PREFIX[: N + 1]):
        known = MultiPoly.parse(text)
        rep.check(L[k] == known, f"L reference coefficient [z^{k}]", known, L[k])
    brute = brute_force_gf("s132", {"x": "fp", "v": "exc", "p": "des1"}, N)
    _series_check(rep, "L closed form vs S_n(132)", brute, L)
    dyck = brute_force_gf("dyck", {"x": "ct", "v": "rt", "p": "peaks"}, N)
    _series_check(rep, "L vs centered/right tunnels and peaks", dyck, L)
    image = brute_force_gf("dyck", {"x": "hills", "v": "er", "p": "oc"}, N)
    _series_check(rep, "L vs hills/even rises/oc", image, L)
    _series_check(rep, "L via the K1 quadratic", gf.gf_L_via_K1(N), L)
    return rep


def suite_gf_J(order: int = 8, **_) -> VerificationReport:
    N = order
    rep = VerificationReport("gf-J", {"order": N})
    V = {c: MultiPoly.var(c) for c in "xtsuvq"}
    x, t, s, u, v, q = (V[c] for c in "xtsuvq")
    one = TruncatedSeries.one(N)
    zeroN = TruncatedSeries.zero(N)

    def zmul(S, m=1):
        return S.shift(1).truncate(N).scale(m)

    K = gf.solve_K(N)
    lin = TruncatedSeries([1, -(u + v), u * v * (1 - q) ** 2], N)
    residual = zmul(K * K, u) - lin * K + zmul(one, q * q * v)
    _series_check(rep, "K quadratic residual", zeroN, residual)

    J = gf.gf_J(N, K)
    H = J.subs({"t": 1})
    j_rel = zmul(one, x * t * s * u) + zmul(H, x * t * u) + zmul(K, u) + zmul(H * K, u)
    _series_check(rep, "J = xtsuz + xtuzH + uzK + uzHK", J, j_rel)
    h_rel = zmul(one, x * s * u) + zmul(H, x * u) + zmul(K, u) + zmul(H * K, u)
    _series_check(rep, "H = xsuz + xuzH + uzK + uzHK", H, h_rel)
    K_from_J = J.subs({"x": 1, "t": q, "s": q, "u": v, "v": u})
    _series_check(rep, "K = J(1,q,q,v,u,q,z)", K, K_from_J)

    M = J.subs({"x": 1, "t": 1, "s": q, "u": v, "v": u})
    K_hat = K.swap("u", "v")
    k_rel = zmul(one, q * q * v) + zmul(M, q * v) + zmul(K_hat, v) + zmul(M * K_hat, v)
    _series_check(rep, "K = q^2vz + qvzM + vzK^ + vzMK^", K, k_rel)
    m_rel = zmul(one, q * v) + zmul(M, v) + zmul(K_hat, v) + zmul(M * K_hat, v)
    _series_check(rep, "M = qvz + vzM + vzK^ + vzMK^", M, m_rel)
    coeff = TruncatedSeries([1, 2 * q * v - q * q * v - v], N)
    elim = zmul(coeff * K_hat, v) + zmul(K, v) - K + zmul(K * K_hat, v) + zmul(one, q * q * v)
    _series_check(rep, "M eliminated: K, K^ relation", zeroN, elim)
    residual_hat = zmul(K_hat * K_hat, v) - lin.swap("u", "v") * K_hat + zmul(one, q * q * u)
    _series_check(rep, "K^ satisfies the swapped quadratic", zeroN, residual_hat)

    brute = brute_force_gf(
        "dyck_nonempty", {"x": "hills", "t": "ih", "s": "fh", "u": "odr", "v": "er", "q": "mu"}, N
    )
    _series_check(rep, "J closed form vs brute force", brute, J)
    L_from_J = one + J.subs({"t": 1, "s": MultiPoly.var("p"), "u": 1, "q": MultiPoly.var("p")})
    _series_check(rep, "1 + J(x,1,p,1,v,p,z) = L", gf.gf_L(N), L_from_J)
    _series_check(rep, "J symmetric in t and s", J, J.swap("t", "s"))
    for k in range(N + 1):
        degs = (J[k].degree("t"), J[k].degree("s"))
        rep.check(max(degs) <= 1, f"J degree in t, s at [z^{k}]", "<= 1", degs)
    return rep


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "tunnel-rises": suite_tunnel_rises,
    "regions": suite_regions,
    "concat": suite_concat,
    "concat-r": suite_concat_r,
    "bijectivity": suite_bijectivity,
    "peak-transport": suite_peaks,
    "rs": suite_rs,
    "kra": suite_kra,
    "alpha-beta": suite_alpha_beta,
    "fp-exc": suite_fp_exc,
    "gf-G": suite_gf_G,
    "gf-F": suite_gf_F,
    "gf-L": suite_gf_L,
    "gf-J": suite_gf_J,
}


# older names kept so existing scripts keep working
SUITE_ALIASES = {
    "theorem3": "tunnel-rises",
    "theorem6": "regions",
    "lemma1": "concat",
    "lemma5": "concat-r",
}


def run_suite(name: str, max_n: int | None = None, max_r: int | None = None, order: int | None = None) -> VerificationReport:
    """Run one named suite (or ``"all"``) with optional overrides."""
    name = SUITE_ALIASES.get(name, name)
    if name != "all" and name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")
    kwargs = {}
    if max_n is not None:
        kwargs["max_n"] = max_n
    if max_r is not None:
        kwargs["max_r"] = max_r
    if order is not None:
        kwargs["order"] = order
    start = time.perf_counter()
    if name == "all":
        rep = VerificationReport("all", dict(sorted(kwargs.items())))
        for fn in SUITES.values():
            rep.merge(fn(**kwargs))
    else:
        rep = SUITES[name](**kwargs)
    rep.elapsed = time.perf_counter() - start
    return rep

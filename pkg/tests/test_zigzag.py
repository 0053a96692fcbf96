import pytest
from hypothesis import given, strategies as st

from tunnelkit.dyck import DyckPath, enumerate_paths, parse
from tunnelkit.errors import ROutOfRange
from tunnelkit.stats import (
    cmt_at,
    hills,
    odd_even_rises,
    peaks,
    region_stats,
    returns_and_arches,
    tunnel_counts_at,
    u_star_d,
)
from tunnelkit.zigzag import (
    build_labeled_word,
    phi,
    phi_inverse,
    phi_r,
    phi_r_inverse,
    sigma_r,
    trace_phi_r,
)

from conftest import dyck_paths


def path_and_r(max_n=9):
    return dyck_paths(max_n=max_n).flatmap(lambda D: st.tuples(st.just(D), st.integers(0, D.n)))


def test_sigma_examples():
    assert sigma_r(2, 0).order == (1, 4, 2, 3)
    assert sigma_r(2, 2).order == (1, 2, 3, 4)
    assert sigma_r(9, 2).order[:8] == (1, 2, 3, 4, 5, 18, 6, 17)
    assert sigma_r(9, 2)[6] == 18


@pytest.mark.parametrize("n", range(0, 9))
def test_sigma_is_permutation(n):
    for r in range(n + 1):
        order = sigma_r(n, r).order
        assert sorted(order) == list(range(1, 2 * n + 1))


def test_sigma_r_range():
    with pytest.raises(ROutOfRange):
        sigma_r(3, 4)
    with pytest.raises(ROutOfRange):
        phi_r(parse("ud"), -1)


def test_phi_examples(figure_path):
    assert phi(parse("ud")).word == "ud"
    assert phi(parse("uudd")).word == "udud"
    assert phi(parse("udud")).word == "uudd"
    image = phi(figure_path)
    assert image.word == "uuuddduduuddud"
    assert hills(image) == tunnel_counts_at(figure_path, 0)[0] == 2


def test_phi_r_full_prefix_is_identity():
    for D in enumerate_paths(5):
        assert phi_r(D, D.n) == D


def test_labeled_word_examples():
    lw = build_labeled_word(parse("ud"))
    assert (lw.symbols, lw.labels) == ("oc", (1, 1))
    lw = build_labeled_word(parse("udud"))
    assert lw.symbols == "ooc" "c"
    assert lw.pairs() == [(1, 4), (2, 3)]
    assert build_labeled_word(parse("uudd")).pairs() == [(1, 2), (3, 4)]


def test_inverse_examples():
    assert phi_inverse(parse("ud")).word == "ud"
    assert phi_r_inverse(parse("udud"), 0).word == "uudd"


def test_round_trip_n9_r2():
    for D in enumerate_paths(9):
        assert phi_r_inverse(phi_r(D, 2), 2) == D


@given(path_and_r(10))
def test_round_trip(Dr):
    D, r = Dr
    assert phi_r_inverse(phi_r(D, r), r) == D


@pytest.mark.parametrize("n", range(0, 8))
def test_phi_r_bijective(n):
    paths = list(enumerate_paths(n))
    for r in range(n + 1):
        assert len({phi_r(D, r) for D in paths}) == len(paths)


@given(dyck_paths(max_n=10))
def test_tunnel_correspondences(D):
    E = phi(D)
    at, le, right = tunnel_counts_at(D, 0)
    odr, er = odd_even_rises(E)
    assert at == hills(E)
    assert right == er
    assert le == odr
    assert cmt_at(D, 0) == returns_and_arches(E)


@given(path_and_r(9))
def test_region_correspondences(Dr):
    D, r = Dr
    E = phi_r(D, r)
    at, le, right = tunnel_counts_at(D, r)
    reg = region_stats(E, r)
    assert reg.hills_gt_2r == at
    assert reg.even_rises_gt_2r == right
    assert reg.odd_rises_gt_2r + reg.upsteps_le_2r == le
    assert reg.arches_ge_2r == cmt_at(D, r)


@given(dyck_paths(max_n=10))
def test_peaks_go_to_u_star_d(D):
    assert peaks(D) == u_star_d(phi(D))[1]


@given(dyck_paths(max_n=6))
def test_wrapped_arch(B):
    assert phi(DyckPath("u" + B.word + "d")).word == "ud" + phi(B).word


@given(dyck_paths(max_n=7, min_n=1), dyck_paths(max_n=3), st.data())
def test_concatenation_identity(outer, B, data):
    # split a path into A | C with len(A) = len(C) + 2r, then insert B at the cut
    w = outer.word
    a = data.draw(st.integers(len(w) // 2, len(w)))
    r = a - len(w) // 2
    D = DyckPath(w[:a] + B.word + w[a:])
    assert phi_r(D, r).word == phi_r(outer, r).word + phi(B).word


def test_trace():
    log = trace_phi_r(parse("uudd"))
    assert log == [(1, 1, "open"), (2, 4, "close"), (3, 2, "open"), (4, 3, "close")]
    assert "".join("u" if kind == "open" else "d" for _, _, kind in log) == phi(parse("uudd")).word

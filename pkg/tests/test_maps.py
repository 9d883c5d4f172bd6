import pytest

from fockcrystal import (
    CrystalError,
    Multicharge,
    Multipartition,
    NotUglovError,
    OrbitMismatchError,
    canonical_charge,
    hu_map,
    iota,
    is_divided_bipartition,
    is_e_regular,
    is_in_iota_image,
    is_uglov,
    psi,
    r_value,
    split_count,
    uglov_set,
)
from fockcrystal.maps import (
    cyclic_shift,
    hu_map_conjugation,
    hu_map_replay,
    iota_direct,
    iota_replay,
    iota_source_charge,
)
from fockcrystal.multipartition import partitions
from helpers import C, P


def test_canonical_charge():
    assert canonical_charge(2, 4) == C("0,2", 4)
    assert canonical_charge(4, 8) == C("0,2,4,6", 8)
    assert canonical_charge(1, 3) == C("0", 3)
    with pytest.raises(CrystalError):
        canonical_charge(3, 4)


def test_hu_example():
    s = C("0,10", 4)
    mp = P("1.1|5.1")
    assert psi(mp, s, C("0,2", 4)) == P("2.1|5")
    assert hu_map(mp, s, check=True) == P("4|3.1")
    assert hu_map(Multipartition.empty(2), s) == Multipartition.empty(2)


@pytest.mark.parametrize("charge", [C("0,2", 4), C("0,10", 4), C("-6,4", 4), C("3,0", 6)], ids=str)
def test_hu_implementations_agree(charge):
    for n in range(7):
        layer = uglov_set(charge, n)
        images = [hu_map_conjugation(mp, charge) for mp in layer]
        assert images == [hu_map_replay(mp, charge) for mp in layer]
        assert set(images) == set(layer)


@pytest.mark.parametrize("l, e", [(2, 2), (2, 4), (2, 6), (3, 6)])
def test_hu_is_cyclic_shift_at_canonical_charge(l, e):
    charge = canonical_charge(l, e)
    for n in range(7):
        for mp in uglov_set(charge, n):
            assert hu_map_replay(mp, charge) == cyclic_shift(mp)
            image = mp
            for _ in range(l):
                image = hu_map(image, charge)
            assert image == mp


def test_cyclic_shift_direction():
    assert cyclic_shift(P("1|2|3")) == P("3|1|2")


def test_hu_rejects_bad_charges():
    with pytest.raises(OrbitMismatchError):
        hu_map(P("1|-"), C("0,1", 4))
    with pytest.raises(CrystalError):
        hu_map(P("1|-|-"), C("0,1,2", 4))


def test_iota_examples():
    lam = P("4.3.1")
    assert iota(lam, 1, C("0,2", 4), check=True) == P("4.3.1|4.3.1")
    assert iota(lam, 1, C("0,22", 4), check=True) == P("3.2.1|4.3.2.1")


@pytest.mark.parametrize("charge", [C("0,2", 4), C("0,22", 4)], ids=str)
def test_iota_implementations_agree(charge):
    for n in range(6):
        for p in partitions(n):
            if not is_e_regular(p, 2):
                continue
            mp = Multipartition((p,))
            out = iota_direct(mp, 1, charge)
            assert out == iota_replay(mp, 1, charge)
            assert out.rank == 2 * n
            assert is_uglov(out, charge)


@pytest.mark.parametrize(
    "l, k, e, entries",
    [(4, 2, 4, (0, 13, 26, 39)), (3, 1, 6, (4, 2, 12)), (4, 1, 8, (2, 0, 4, 6)), (2, 1, 6, (3, 12))],
)
def test_iota_implementations_agree_elsewhere(l, k, e, entries):
    charge = Multicharge(entries, e)
    source = iota_source_charge(k, l, e)
    seen = {}
    for n in range(4):
        for mp in uglov_set(source, n):
            out = iota(mp, k, charge, check=True)
            assert out.rank == (l // k) * n
            assert out not in seen
            seen[out] = mp


def test_iota_full_level_is_identity():
    charge = canonical_charge(2, 4)
    for n in range(5):
        for mp in uglov_set(charge, n):
            assert iota(mp, 2, charge, check=True) == mp


def test_iota_rejects_non_uglov_input():
    with pytest.raises(NotUglovError):
        iota(P("1.1"), 1, C("0,2", 4))
    with pytest.raises(CrystalError):
        iota(P("1"), 1, C("0,2", 2))


@pytest.mark.parametrize("mp, expected", [("3.1|2|3.1|2", 2), ("-|-|-|-", 4), ("1|2", 1), ("1|1|1", 3), ("1|-|1|-|1|-", 3)])
def test_r_value(mp, expected):
    assert r_value(P(mp)) == expected


def test_split_count_examples():
    s = C("0,1,2,3", 4)
    far = C("0,13,26,39", 4)
    assert split_count(P("3.1|2|3.1|2"), s) == 2
    assert psi(P("3.1|2|3.1|2"), s, far) == P("2.1|1|3.2|2.1")
    assert split_count(P("2.1|1|3.2|2.1"), far) == 2
    assert split_count(Multipartition.empty(4), far) == 4


@pytest.mark.parametrize("source, target", [(C("0,2", 4), C("0,10", 4)), (C("0,2,4", 6), C("4,8,12", 6))], ids=str)
def test_split_count_is_label_independent(source, target):
    for n in range(7):
        for mp in uglov_set(source, n):
            assert split_count(mp, source) == split_count(psi(mp, source, target), target)


def test_iota_image_examples():
    assert is_in_iota_image(P("3.1|2|3.1|2"), 2, C("0,1,2,3", 4))
    assert is_in_iota_image(P("4.3.1|4.3.1"), 1, C("0,2", 4))
    assert not is_in_iota_image(P("1|-|-|-"), 2, C("0,1,2,3", 4))
    assert not is_in_iota_image(P("2|1"), 1, C("0,2", 4))


def test_iota_image_matches_iota():
    charge = C("0,13,26,39", 4)
    source = iota_source_charge(2, 4, 4)
    images = {iota(mp, 2, charge) for n in range(3) for mp in uglov_set(source, n)}
    for n in range(0, 5, 2):
        for mp in uglov_set(charge, n):
            assert is_in_iota_image(mp, 2, charge) == (mp in images)


def test_divided_examples():
    assert is_divided_bipartition(P("2.1|2.1"), 0, 4)
    assert is_uglov(P("2.1|2.1"), C("0,2", 4))
    for N in range(3):
        assert not is_divided_bipartition(P("1|-"), N, 4)


def test_divided_rejects():
    with pytest.raises(CrystalError):
        is_divided_bipartition(P("1|-"), 0, 5)
    with pytest.raises(CrystalError):
        is_divided_bipartition(P("1|-|-"), 0, 4)


@pytest.mark.parametrize("N, e", [(0, 4), (1, 4), (0, 6), (2, 2)])
def test_divided_iff_two_summands(N, e):
    charge = Multicharge((0, e // 2 + N * e), e)
    for n in range(7):
        for mp in uglov_set(charge, n):
            assert is_divided_bipartition(mp, N, e) == (split_count(mp, charge) == 2)


@pytest.mark.parametrize("e", [4, 6])
def test_divided_at_zero_are_doubled_regular_partitions(e):
    charge = Multicharge((0, e // 2), e)
    for n in range(7):
        divided = {mp for mp in uglov_set(charge, n) if is_divided_bipartition(mp, 0, e)}
        doubled = {
            Multipartition((p, p)) for p in (partitions(n // 2) if n % 2 == 0 else []) if is_e_regular(p, e // 2)
        }
        assert divided == doubled

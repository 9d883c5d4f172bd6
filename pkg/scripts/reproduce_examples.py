"""Recompute the worked examples and print each value next to the expected one."""

from fockcrystal import (
    Multicharge,
    Multipartition,
    crystal_graph,
    good_addable,
    good_removable,
    hu_map,
    iota,
    psi,
    split_count,
)

P = Multipartition.parse


def C(text, e):
    return Multicharge.parse(text, e)


def check(label, got, expected):
    mark = "ok " if str(got) == str(expected) else "!! "
    print(f"{mark}{label}: {got}  (expected {expected})")


def main():
    lam, s = P("4|2.1"), C("0,1", 3)
    check("good removable 0-node", tuple(good_removable(lam, s, 0)), (1, 4, 1))
    check("good addable 2-node", tuple(good_addable(lam, s, 2)), (2, 1, 1))
    check("good removable 2-node", tuple(good_removable(lam, s, 2)), (1, 2, 2))

    s001, s203 = C("0,0,1", 2), C("2,0,3", 2)
    layer = sorted(map(str, crystal_graph(s001, 4).layer(4)))
    print("   rank-4 Uglov set, e=2, s=(0,0,1):", " ".join(layer))
    for src, dst in [("2|2|-", "2|1|1"), ("1|1|2", "1|-|2.1"), ("3|-|1", "3|-|1")]:
        check(f"psi (0,0,1)->(2,0,3) of {src}", psi(P(src), s001, s203), dst)

    s = C("0,10", 4)
    check("psi (0,10)->(0,2) of 1.1|5.1", psi(P("1.1|5.1"), s, C("0,2", 4)), "2.1|5")
    check("hu map of 1.1|5.1 at (0,10)", hu_map(P("1.1|5.1"), s), "4|3.1")

    check("iota_1 at (0,2) of 4.3.1", iota(P("4.3.1"), 1, C("0,2", 4)), "4.3.1|4.3.1")
    check("iota_1 at (0,22) of 4.3.1", iota(P("4.3.1"), 1, C("0,22", 4)), "3.2.1|4.3.2.1")

    near, far = C("0,1,2,3", 4), C("0,13,26,39", 4)
    check("psi (0,1,2,3)->(0,13,26,39)", psi(P("3.1|2|3.1|2"), near, far), "2.1|1|3.2|2.1")
    check("split count at (0,1,2,3)", split_count(P("3.1|2|3.1|2"), near), 2)
    check("split count at (0,13,26,39)", split_count(P("2.1|1|3.2|2.1"), far), 2)


if __name__ == "__main__":
    main()

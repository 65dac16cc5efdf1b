"""Smoke test for the sweeplab extension module.

Build first, e.g. `maturin develop -m crates/py/Cargo.toml`, or copy
target/release/libsweeplab.so next to this file as sweeplab.so.
"""

import sweeplab


def main():
    p = sweeplab.Path("NENEE", 3, 2)
    assert p.ranks == [0, 3, 1, 4, 2]
    assert p.is_dyck()
    assert p.sweep().word == "NNEEE"
    assert p.sweep().unsweep() == p
    assert p.dinv() == p.sweep().area() == 1
    assert p.area() == p.area_formula() == 0
    assert p.dinv_cells() == p.dinv()

    assert sweeplab.count_dyck(3, 2) == 2
    assert sweeplab.count_dyck(7, 5) == 66
    assert len(sweeplab.enumerate_dyck(2, 1, 3)) == sweeplab.count_dyck(2, 1, 3)
    assert sweeplab.max_stat(7, 5) == 12
    assert sweeplab.joint_distribution(3, 2) == {(1, 0): 1, (0, 1): 1}

    for w in sweeplab.enumerate_dyck(5, 3):
        for q, _k in w.valid_moves():
            c = w.region_counts(q)
            assert c["red_t1"] == c["blue_t1"]
            assert c["red_b2"] + 1 == c["blue_b2"]
            assert w.apply_move(q).area() == w.area() - 1

    ok, report = sweeplab.verify(5, 3)
    assert ok, report
    assert "<svg" in p.svg("diagram", highlight=3)

    assert not sweeplab.Path("NEENE", 3, 2).is_dyck()
    try:
        sweeplab.Params(4, 2)
    except ValueError:
        pass
    else:
        raise AssertionError("non-coprime params accepted")

    print("python smoke test: PASS")


if __name__ == "__main__":
    main()

"""Smoke test for the curcoh Python bindings."""

import json

import curcoh


def main():
    sl2 = curcoh.Algebra.catalog("sl2")
    assert sl2.dim == 3 and sl2.validate() == []
    assert sl2.coeff(1, 0, 0) == "2"

    tp2 = curcoh.Algebra.catalog("tp2")
    cur = sl2.current(tp2)
    assert cur.dim == 6 and cur.validate() == []

    adj = curcoh.Module.catalog("adjoint", sl2)
    assert adj.cohomology_dim(2) == 0

    again = curcoh.Algebra.from_json(sl2.to_json())
    assert again.basis == sl2.basis

    r = curcoh.verify("T2_1", "sl2", "adjoint", "tp2")
    assert r.matched and r.direct_dim == r.formula_dim == 1
    assert sum(s[3] for s in r.summands) == r.formula_dim
    assert json.loads(r.to_json())["match"] is True

    assert curcoh.verify("C2_2", "sl2", "adjoint", "tp2").direct_dim == 7
    assert curcoh.prolong_gl(2, 1) == [2, 4, 6]
    assert curcoh.grading_dims(3, 2) == [4, 7, 4]
    assert curcoh.spencer(3, 2) == (16, 4, 4)
    assert curcoh.cauchy3(3, 2)[0] == 20

    try:
        curcoh.Algebra.catalog("nonsense")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown name accepted")

    print("python smoke test passed")


if __name__ == "__main__":
    main()

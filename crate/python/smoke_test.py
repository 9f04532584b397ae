#!/usr/bin/env python3
"""Smoke test for the hurwitz_py extension module.

Builds nothing itself: it looks for the compiled cdylib under target/
(`cargo build -p hurwitz-py` or `--release`), copies it next to a temp
directory under the importable name, and checks the headline numbers.
"""

import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def locate_cdylib() -> pathlib.Path:
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libhurwitz_py.so", "hurwitz_py.so", "libhurwitz_py.dylib")
    ]
    for path in candidates:
        if path.exists():
            return path
    sys.exit(
        "hurwitz_py cdylib not found; run `cargo build -p hurwitz-py` first "
        f"(searched {len(candidates)} paths under {ROOT / 'target'})"
    )


def main() -> None:
    cdylib = locate_cdylib()
    staging = pathlib.Path(tempfile.mkdtemp(prefix="hurwitz-py-"))
    shutil.copy2(cdylib, staging / "hurwitz_py.so")
    sys.path.insert(0, str(staging))

    import hurwitz_py as hw

    # Degree 2: the polynomial is a pure odd power and the count is 1/2.
    assert hw.hurwitz_number(1, n=2) == "1/2"
    assert hw.hurwitz_number(3, n=2) == "1/2"

    # Degree 3, genus 1: 54 factorizations, weighted count 9.
    assert hw.hurwitz_number(1, n=3) == "9"
    poly = json.loads(hw.hurwitz_poly_json(1, n=3))
    assert poly["n"] == 3
    total = sum(
        int(t["coeff"].split("/")[0]) for t in poly["terms"]
    )
    assert total == 54, total

    # Class targets, negative genus included (disconnected covers).
    assert hw.hurwitz_number(-1, lambda_="1,1") == "1/2"

    # The product formula and the cut-and-join equation, exact.
    assert hw.verify_div(3, 1)
    assert hw.verify_div(4, 1)
    assert hw.verify_cutjoin(2, 4)

    # Closed form agrees with the enumeration above.
    assert hw.hurwitz_closed(3, 1) == "9"

    # 16 labeled trees on four vertices.
    t4 = json.loads(hw.tree_poly_json(4))
    assert len(t4["terms"]) == 16
    assert all(t["coeff"] == "1" for t in t4["terms"])

    # Bernoulli numbers drive the even series.
    assert hw.bernoulli(2) == "1/6"
    assert hw.bernoulli(12) == "-691/2730"

    # Graph side: the triple edge has 4 embeddings, 2 one-faced, and the
    # decoration weights sum to 1/2.
    theta = hw.Graph("1-2;1-2;1-2")
    assert theta.beta1() == 2
    emb, one_faced, weight_sum, check = theta.verify_spiders()
    assert (emb, one_faced, weight_sum, check) == (4, 2, "1/2", True)
    assert not theta.is_long()
    long = theta.subdivide_to_long()
    assert long.is_long() and long.vertex_count() == 5

    # One vertex, four loops: 1008 of 5040 embeddings are one-faced.
    rose = hw.Graph("1-1;1-1;1-1;1-1")
    assert rose.emb_count() == 5040
    assert rose.one_faced_count() == 1008
    assert rose.decoration_sum() == "1/5"

    # Collected R at g=1 is (1/3) double edge + (1/12) two-path.
    series = {t["edges"]: t["coeff"] for t in json.loads(hw.exp_r_collected_json(1, 3))}
    assert series == {"1-2;1-2": "1/3", "1-2;1-3": "1/12"}

    print("hurwitz_py smoke test: all checks passed")


if __name__ == "__main__":
    main()

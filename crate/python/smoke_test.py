#!/usr/bin/env python3
"""Smoke test for the cicy_py extension module.

Builds the cdylib if needed, stages it as an importable module, and drives
the main entry points end to end. Run from anywhere:

    python3 python/smoke_test.py
"""

import math
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def build_extension() -> Path:
    subprocess.run(
        ["cargo", "build", "-p", "cicy-py", "--release"],
        cwd=REPO,
        check=True,
    )
    candidates = [
        REPO / "target" / "release" / "libcicy_py.so",
        REPO / "target" / "release" / "libcicy_py.dylib",
        REPO / "target" / "release" / "cicy_py.dll",
    ]
    for lib in candidates:
        if lib.exists():
            return lib
    raise SystemExit("built library not found under target/release")


def stage(lib: Path, stage_dir: Path) -> None:
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    shutil.copy2(lib, stage_dir / f"cicy_py{suffix}")
    sys.path.insert(0, str(stage_dir))


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        stage(build_extension(), Path(tmp))
        import cicy_py

        # catalog
        rows = cicy_py.load_catalog()
        assert len(rows) == 9
        assert [r.ell for r in rows] == [16, 36, 4, 18, 32, 12, 6, 16, 8]
        assert rows[1].cicy_type == "5" and rows[1].a == [3, 2]
        for r in rows:
            assert r.ell == (2 * r.mu - 2) * r.a_penult * r.a_last
            assert sum(r.b) == sum(r.a)

        # certificates and counts
        cert = cicy_py.admissible("5", 9, 7)
        assert cert is not None and cert.admissible
        assert cert.exists_on_k3 == "EQUALITY_BRANCH"
        assert cert.expected_count == math.comb(34, 7)
        assert cicy_py.admissible("5", 5, 3) is None
        pinned = cicy_py.certify(1, 5, 3)
        assert pinned.exists_on_k3 == "EXCLUDED_PAIR" and not pinned.admissible
        assert cicy_py.expected_count(1, 1) == 14
        assert cicy_py.expected_count(2, 1) == 34
        assert cicy_py.expected_count(9, 3) == 20
        assert cicy_py.expected_count(2, 20) == math.comb(34, 20)

        # tables
        assert cicy_py.min_degree("5", 10) == 11
        assert cicy_py.min_degree("4,2", 12) == 14
        assert cicy_py.min_degree("5", 23) is None
        assert cicy_py.admissible_degrees("2,2,2,2", 3, 12) == list(range(7, 13))
        assert cicy_py.verify_theorem("all")
        assert [cicy_py.genus_cap(t) for t in ("5", "4,2", "3,3", "3,2,2", "2,2,2,2")] == [
            22,
            15,
            7,
            10,
            3,
        ]
        grid = [
            (d, g)
            for d in range(1, 41)
            for g in range(0, 31)
            if (cicy_py.admissible("5", d, g) is not None) != cicy_py.quintic_oracle(d, g)
        ]
        assert grid == [], f"oracle disagreements: {grid[:5]}"

        # node lab: two conics meet in four independent points
        run = cicy_py.plane_nodes(2, 2, seed=1, spark=[1, 2])
        assert run.prime == 10007
        assert sum(run.multiplicities) == 4
        assert all(rep.passed for rep in run.spark)
        assert all(len(pt) == 3 for pt in run.points)
        assert all(len(c) == run.ext_degree for pt in run.points for c in pt)

        # determinism
        again = cicy_py.plane_nodes(2, 2, seed=1, spark=[1, 2])
        assert run.points == again.points and run.modulus == again.modulus

        # null-space section: degrees match the row's generator degrees
        for row in (1, 2, 9):
            section = cicy_py.kernel_section(row, seed=3)
            degrees = [d for d, _ in section]
            assert degrees == rows[row - 1].a, (row, degrees)

        print("smoke test OK:", len(rows), "rows,", "quintic count", cert.expected_count)


if __name__ == "__main__":
    main()

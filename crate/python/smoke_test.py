"""Build the extension, import it, and exercise the main entry points."""

import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def build_module() -> pathlib.Path:
    subprocess.run(
        ["cargo", "build", "-p", "ivhs-py", "--release"], cwd=ROOT, check=True
    )
    src = ROOT / "target" / "release" / "libivhs.so"
    tmp = pathlib.Path(tempfile.mkdtemp())
    dst = tmp / "ivhs.so"
    shutil.copy(src, dst)
    return tmp


def main() -> None:
    sys.path.insert(0, str(build_module()))
    import ivhs

    p4 = json.dumps(
        {
            "rays": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [-1, -1, -1, -1]],
            "max_cones": [[0, 1, 2, 3], [0, 1, 2, 4], [0, 1, 3, 4], [0, 2, 3, 4], [1, 2, 3, 4]],
        }
    )
    simplex = json.dumps(
        {
            "dim_ambient": 4,
            "inequalities": [
                {"a": [1, 0, 0, 0], "c": 0},
                {"a": [0, 1, 0, 0], "c": 0},
                {"a": [0, 0, 1, 0], "c": 0},
                {"a": [0, 0, 0, 1], "c": 0},
                {"a": [-1, -1, -1, -1], "c": 1},
            ],
        }
    )

    assert ivhs.ehrhart_coefficients(simplex) == ["1", "25/12", "35/24", "5/12", "1/24"]
    assert ivhs.hodge_numbers(p4, [1, 0, 0, 0, 0], 5) == ("1", "101")
    assert ivhs.moduli_dim(p4, [1, 0, 0, 0, 0], 5) == 101

    cert = json.loads(ivhs.check_toric(p4, [1, 0, 0, 0, 0], 5))
    assert (cert["h_top"], cert["h_next"]) == ("1", "101")
    assert cert["verdict"] == "Inconclusive"

    sextic = json.loads(ivhs.check_toric(p4, [1, 0, 0, 0, 0], 6))
    assert sextic["verdict"] == "NonGeneric"
    assert (sextic["mu"], sextic["rhs"]) == ("185", "153")

    octic = json.loads(ivhs.check_wps([1, 1, 1, 1, 2], 8))
    assert octic["p0_method"] == "weighted-macaulay"
    try:
        ivhs.check_wps([1, 1, 1, 1, 2], 7)
    except ValueError as e:
        assert "Cartier" in str(e)
    else:
        raise AssertionError("d=7 should be rejected")

    quintic_ci = json.loads(ivhs.check_ci(4, [5]))
    assert quintic_ci["mu"] == "101"
    assert ivhs.ci_moduli_dim(4, [5]) == 101

    trials, failures, dims = ivhs.symmetrizer_report(2, 5, 3, 9, trials=5)
    assert (trials, failures) == (5, 0) and dims == [0] * 5

    print("smoke test OK")


if __name__ == "__main__":
    main()

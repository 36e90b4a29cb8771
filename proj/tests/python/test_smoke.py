import json

import pytest

import supervir as sv


@pytest.fixture
def omega():
    return sv.IndexGroup(["1", "sqrt(2)"], "1/2")


@pytest.fixture
def algebra(omega):
    return sv.Algebra(omega, "SV")


def test_scalar_arithmetic():
    x = sv.Scalar("1 + sqrt(2)")
    assert str(x * x.conjugate()) == "-1"
    assert str(sv.Scalar("3/4") + sv.Scalar("1/4")) == "1"
    with pytest.raises(ZeroDivisionError):
        sv.Scalar("0").inverse()


def test_group(omega):
    assert omega.rank == 2
    assert omega.contains("3/2 + sqrt(2)")
    assert not omega.contains("1/3")
    ok, _ = omega.scaling_preserves("3 + 2*sqrt(2)")
    assert ok


def test_brackets(algebra):
    assert str(algebra.bracket("L(0, 0)", "L(1, 0)")) == "L(1, 0)"
    assert str(algebra.bracket("G(1/2, 0)", "G(-1/2, 0)")) == "(2)*L(0, 0)"
    assert algebra.skew_residual("L(1, 2)", "G(1/2, 1)").is_zero()
    assert algebra.jacobi_residual("L(1, 1)", "G(1/2, 0)", "G(-1/2, 2)").is_zero()


def test_sign_defect(omega):
    published = sv.Algebra(omega, "SVir")
    fixed = sv.Algebra(omega, "SVir", "sign_corrected")
    args = ("L(2)", "G(1/2)", "G(-5/2)")
    assert not published.jacobi_residual(*args).is_zero()
    assert fixed.jacobi_residual(*args).is_zero()


def test_window_and_generation(omega, algebra):
    w = sv.Window.box(omega, 1, 1)
    assert len(algebra.window_basis(w)) == 18
    assert algebra.generate_span(sv.Window.box(omega, 2, 3))["missing"] == []
    assert algebra.window_center(w) == []
    r = algebra.is_central("L(0, 0)", w)
    assert not r["central"]


def test_derivations(omega, algebra):
    w = sv.Window.box(omega, 1, 1)
    assert sv.check_d_phi(algebra, ["2", "1/3"], w)["passed"]
    assert sv.check_inner(algebra, "G(1/2, 1)", w)["passed"]
    y = sv.adjust_inner(algebra, "L(1, 0)")
    assert algebra.bracket(y, "L(0, 0)") == algebra.element("L(1, 0)")


def test_automorphisms(omega, algebra):
    p = {"c": "3 + 2*sqrt(2)", "r": "1 + sqrt(2)", "sign": -1}
    assert sv.aut_validate(algebra, p) == []
    assert sv.aut_check_hom(algebra, p, sv.Window.box(omega, 1, 1))["passed"]
    q = {"c": "3 - 2*sqrt(2)", "r": "-1 + sqrt(2)", "sign": 1}
    comp = sv.aut_compose(algebra, p, q)
    assert comp["c"] == "1" and comp["sign"] == -1
    assert sv.aut_validate(algebra, {"c": "2"})


def test_cohomology(omega, algebra):
    w = sv.Window.box(omega, 1, 1)
    g = {"kind": "coboundary", "g": {"L(0,0)": "1", "G(1/2, 1)": "-3"}}
    assert sv.is_cocycle(algebra, g, w)["passed"]
    t = sv.trivialize(algebra, g, w)
    assert t["residual_zero"]
    assert t["f"]["G(1/2, 1)"] == "-3"

    z = sv.IndexGroup(["1"], "1/2")
    svir0 = sv.Algebra(z, "SVir0")
    win = sv.Window.parse(z, {"degrees": ["0", "-2", "2", "3/2", "-3/2"], "i_max": 0})
    assert str(sv.central_cocycle_value(svir0, "L(2)", "L(-2)", win)) == "1/2"
    assert str(sv.central_cocycle_value(svir0, "G(3/2)", "G(-3/2)", win)) == "2/3"


def test_run_command(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"d": 2, "gamma_generators": ["1"], "s": "1/2", "variant": "SV",
                               "window": {"degree_coord_bound": 1, "i_max": 2}}))
    report = sv.run_command("check-axioms", str(cfg))
    assert report["status"] == "pass"
    assert report["checked"] > 0
    assert "check-axioms" in sv.command_names()
    with pytest.raises(ValueError):
        sv.run_command("check-axioms", str(tmp_path / "missing.json"))

import json
import math
import os
import subprocess

import pytest

import conekit


def test_polynomials():
    assert conekit.jacobi_p(2, 0.0, 0.0, 0.5) == pytest.approx(-0.125)
    assert conekit.gegenbauer_z(2, 0.0, 0.5) == pytest.approx(-1.0)


def test_gram_is_identity():
    p = conekit.ConeParams.solid_jacobi(2, 0.5, 0.0, 0.5)
    g = conekit.gram_matrix(p, 4)
    n = g.shape[0]
    assert n == len(conekit.basis_indices(p, 4))
    err = max(abs(g[i, j] - (1.0 if i == j else 0.0)) for i in range(n) for j in range(n))
    assert err < 1e-11


def test_rule_weights():
    x, t, w = conekit.cone_rule(conekit.ConeParams.surface_jacobi(2, -1.0, 0.0), 4)
    assert len(x) == len(t) == len(w)
    assert sum(w) == pytest.approx(1.0)
    assert sum(wi * ti for wi, ti in zip(w, t)) == pytest.approx(0.5)


def test_kernel_routes():
    p = conekit.ConeParams.solid_jacobi(3, 0.0, 0.0, -0.5)
    x, y = [0.1, 0.2, -0.1], [0.0, -0.3, 0.2]
    a = conekit.kernel(p, 5, x, 0.5, y, 0.7, route="sum")
    b = conekit.kernel(p, 5, x, 0.5, y, 0.7, route="closed")
    c = conekit.kernel(p, 5, x, 0.5, y, 0.7, route="triangle")
    assert b == pytest.approx(a, rel=1e-10)
    assert c == pytest.approx(a, rel=1e-10)


def test_eigen_and_errors():
    p = conekit.ConeParams.surface_laguerre(3, -1.0)
    assert max(conekit.eigen_residuals(p, 5)) < 1e-9
    with pytest.raises(conekit.ConfigurationError):
        conekit.eigen_residuals(conekit.ConeParams.surface_jacobi(2, 0.0, 0.0), 3)
    with pytest.raises(conekit.GeometryError):
        conekit.basis_values(conekit.ConeParams.solid_jacobi(2, 0.5, 0.0, 0.0), 2, [0.9, 0.0], 0.5)


def test_lambda_coefficient():
    p = conekit.ConeParams.solid_jacobi(2, 0.5, 0.0, 0.5)
    lam = conekit.critical_index(p)
    v = conekit.lambda_coefficient(lambda s: conekit.gegenbauer_z(4, lam, s), 2, p)
    assert v == pytest.approx(1.0, abs=1e-12)


def test_expressions():
    assert conekit.eval_expr("x1^2 + t", [2.0, 0.0], 3.0) == pytest.approx(7.0)
    with pytest.raises(conekit.ExpressionSyntaxError):
        conekit.eval_expr("x1 + * t", [0.0], 0.0)


def test_run_report():
    r = conekit.run("gram", d=2, mu=0.5, beta=0.0, gamma=0.5, max_degree=6)
    assert {"command", "params", "max_error", "pass", "seed"} <= set(r)
    assert r["pass"] and r["max_error"] <= 1e-10


def test_criterion():
    r = conekit.run_criterion(8)
    assert r["pass"], r["notes"]


@pytest.mark.skipif("CONEKIT_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes(tmp_path):
    cli = os.environ["CONEKIT_CLI"]

    def run(*args):
        return subprocess.run([cli, *args], capture_output=True, text=True)

    ok = run("gram", "--max-degree", "3")
    assert ok.returncode == 0
    assert json.loads(ok.stdout)["pass"] is True
    assert run("project", "--f", "x1 + * t").returncode == 2
    assert run("eigen", "--family", "surface-jacobi", "--beta", "0").returncode == 2
    assert run("gram", "--out", str(tmp_path / "missing" / "x.json")).returncode == 3
    # too few translation nodes: the routes disagree
    assert run("kernel-compare", "--routes", "sum,closed", "--quad-order", "2", "--n", "6").returncode == 1
    # a rule that cannot integrate the Gram products is rejected up front
    assert run("gram", "--max-degree", "4", "--quad-order", "3").returncode == 2

    cfg = tmp_path / "run.cfg"
    cfg.write_text("max-degree=2\nformat=csv\n")
    out = run("gram", "--config", str(cfg), "--max-degree", "1")
    assert out.returncode == 0
    rows = [l for l in out.stdout.splitlines() if l and not l.startswith("#")]
    assert rows[0] == "index,n,m,inner,diagonal_error,max_off_diagonal"
    assert len(rows) == 1 + 4  # degrees 0 and 1: 1 + 3 elements; max-degree 2 would give 10

    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("kernel-compare", "--n", "3", "--seed", "9", "--out", str(a))
    run("kernel-compare", "--n", "3", "--seed", "9", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()
    assert not math.isnan(json.loads(a.read_text())["max_error"])

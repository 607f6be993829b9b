import math

import numpy as np
import pytest

import qspec


def quat(w=0.0, x=0.0, y=0.0, z=0.0):
    return np.array([w, x, y, z])


def diag(*entries):
    n = len(entries)
    a = np.zeros((n, n, 4))
    for k, q in enumerate(entries):
        a[k, k] = q
    return a


I, J, K, ONE = quat(x=1), quat(y=1), quat(z=1), quat(1)


def test_spectrum_spheres():
    spheres = qspec.s_spectrum(diag(quat(2), quat(3)))
    assert [(s["u"], s["v"], s["mult"]) for s in spheres] == [(2.0, 0.0, 1), (3.0, 0.0, 1)]
    (sphere,) = qspec.s_spectrum(diag(I, J))
    assert sphere["mult"] == 2
    assert sphere["v"] == pytest.approx(1.0)


def test_resolvent_and_singularity():
    r = qspec.resolvent(diag(I), quat(2))
    np.testing.assert_allclose(r[0, 0], [0.4, 0.2, 0, 0], atol=1e-15)
    with pytest.raises(qspec.Error, match="resolvent singularity"):
        qspec.resolvent(diag(I), K, side="right")


def test_resolvent_equation():
    r = qspec.resolvent_check(diag(quat(2), I), quat(0, 0, 1.5), quat(-1.5, 0.3))
    assert r["first_form"] < 1e-12 * r["lhs_norm"]
    assert r["second_form"] < 1e-12 * r["lhs_norm"]


def test_riesz_projector():
    out = qspec.riesz(diag(I, quat(3)), [0])
    np.testing.assert_allclose(out["projector"], diag(ONE, quat()), atol=1e-8)
    assert out["idem"] < 1e-8 and out["comm"] < 1e-8
    rotated = qspec.riesz(diag(I, quat(3)), [0], plane=np.array([0.0, 1.0, 1.0]))
    np.testing.assert_allclose(rotated["projector"], out["projector"], atol=1e-8)


def test_decompose_and_measure():
    swap = np.zeros((2, 2, 4))
    swap[0, 1] = swap[1, 0] = ONE
    d = qspec.decompose(swap)
    assert d["angles"] == [0.0, math.pi]
    assert d["multiplicities"] == [2, 2]
    m = qspec.measure(diag(J), np.array([ONE]))
    assert m["q_positive"]
    total = sum(w for _, w in m["atoms"])
    np.testing.assert_allclose(total, ONE, atol=1e-14)


def test_herglotz_is_positive():
    h = qspec.herglotz(diag(I, J), np.array([ONE, ONE]), order=6)
    assert h["psd"]
    assert h["sequence"].shape == (13, 4)
    np.testing.assert_allclose(h["sequence"][6], [2, 0, 0, 0], atol=1e-14)


def test_funcalc():
    u = diag(I, J)
    np.testing.assert_allclose(qspec.funcalc(u, "inverse"), diag(-I, -J), atol=1e-12)
    np.testing.assert_allclose(qspec.funcalc(u, "square"), diag(-ONE, -ONE), atol=1e-12)
    trig = qspec.funcalc_trig(u, [(0, quat(2)), (1, J), (-1, quat(0.5))])
    np.testing.assert_allclose(trig, diag(quat(2, -0.5, 0, 1), quat(1, 0, -0.5, 0)), atol=1e-14)
    with pytest.raises(qspec.Error, match="configuration"):
        qspec.funcalc(u, "sinh")
    assert "abs_cos" in qspec.builtin_functions()


def test_bad_shapes():
    with pytest.raises(qspec.Error, match="dimension"):
        qspec.s_spectrum(np.zeros((2, 3, 4)))


def test_verify_small_run():
    out = qspec.verify(seed=3, dim_cap=2, instances=1)
    assert out["exit_code"] == 0
    assert all(g["pass"] for g in out["summary"])
    assert qspec.verify(nodes=16, instances=1)["exit_code"] == 1

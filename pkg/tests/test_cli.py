import json

import pytest

import frontwave
from handlers.report import Report, render


@pytest.fixture
def run(capsys):
    def invoke(*argv):
        status = frontwave.main(list(argv))
        out, err = capsys.readouterr()
        return status, out, err

    return invoke


def test_validate_ok(run, fixture_path):
    status, out, _ = run("validate", fixture_path("torus_eight.front"))
    assert status == 0
    assert ": ok (double points 1, cusps 0)" in out
    assert "maslov 0, whitney -, l = a1 b1 f" in out


def test_validate_reports_worst_status(run, fixture_path):
    status, out, _ = run("validate", fixture_path("torus_eight.front"), fixture_path("unpaired.front"))
    assert status == 1
    assert "UnpairedDoublePoint" in out
    status, out, _ = run("validate", "--jobs", "2", fixture_path("unpaired.front"), fixture_path("bad_syntax.front"))
    assert status == 2
    assert "error" in out


def test_validate_json(run, fixture_path):
    path = fixture_path("torus_eight.front")
    status, out, _ = run("--json", "validate", "--print", path)
    payload = json.loads(out)
    assert status == 0 and payload["status"] == 0
    assert payload[path]["ok"] is True
    assert payload[path]["double_points"] == 1
    assert payload[path]["code"].startswith("frontcode v1")


def test_planar_invariants(run, fixture_path):
    status, out, _ = run("invariants", "--inv", "Jplus", "--base", "1,0", "--moves", fixture_path("plane_kplus.moves"))
    assert status == 0
    assert "value: 2" in out
    assert "Kplus + K+[1 | f]" in out
    status, out, _ = run("invariants", "--inv", "Stp", "--base", "2,1")
    assert "value: 3/2" in out
    status, _, _ = run("invariants", "--inv", "Stp", "--base", "x")
    assert status == 2
    status, _, _ = run("invariants", "--inv", "Jplus", "--base", "-1,0")
    assert status == 2


def test_iplus_with_moves(run, fixture_path):
    status, out, _ = run("iplus", fixture_path("torus_eight.front"))
    assert status == 0
    assert "1 * K+[a1 | b1 f]" in out
    status, out, _ = run("iplus", fixture_path("torus_eight.front"), "--moves", fixture_path("torus_kplus.moves"))
    assert status == 0
    assert "jump law: ok" in out


def test_iplus_on_klein_bottle_is_a_domain_error(run, fixture_path):
    status, _, err = run("iplus", fixture_path("klein_d2.front"))
    assert status == 1
    assert "UnsupportedSurface" in err


def test_integrate(run, fixture_path):
    status, out, _ = run(
        "integrate",
        fixture_path("torus_eight.front"),
        "--moves",
        fixture_path("torus_kplus.moves"),
        "--psi",
        fixture_path("torus_psi.table"),
        "--base",
        "1/2",
    )
    assert status == 0
    assert "delta: 3" in out
    assert "value: 7/2" in out


def test_integrate_rejects_bad_base(run, fixture_path):
    status, _, _ = run(
        "integrate",
        fixture_path("torus_eight.front"),
        "--moves",
        fixture_path("torus_kplus.moves"),
        "--psi",
        fixture_path("torus_psi.table"),
        "--base",
        "1/3",
    )
    assert status == 2


def test_check_integrability_failure(run, fixture_path):
    status, out, _ = run("check-integrability", "--surface", "torus", "--psi", fixture_path("chi_violating.table"))
    assert status == 1
    assert "fail PiLambda [Pi[a1 | b1 | or=0 | mu=0]] delta 4" in out
    assert "result: fail" in out


def test_check_integrability_pass(run, fixture_path):
    status, out, _ = run("check-integrability", "--surface", "torus", "--psi", fixture_path("chi_ok.table"))
    assert status == 0
    assert "result: pass" in out


def test_check_integrability_on_klein_bottle(run, fixture_path):
    sample = fixture_path("klein_d2.front")
    status, out, _ = run("check-integrability", "--sample", sample, "--psi", fixture_path("klein_kplus.table"))
    assert status == 1
    assert "verdict: NotIntegrable(gamma1)" in out
    assert "delta_gamma1: 2" in out

    status, out, _ = run("check-integrability", "--sample", sample, "--psi", fixture_path("empty.table"))
    assert status == 0
    assert "verdict: Conditional(gamma2-unchecked)" in out

    status, out, _ = run(
        "check-integrability",
        "--sample",
        sample,
        "--psi",
        fixture_path("empty.table"),
        "--gamma2",
        fixture_path("gamma2.events"),
    )
    assert status == 0
    assert "verdict: Integrable" in out
    assert "delta_gamma2: 0" in out


def test_check_integrability_needs_surface(run, fixture_path):
    status, _, _ = run("check-integrability", "--psi", fixture_path("chi_ok.table"))
    assert status == 2


@pytest.mark.parametrize(
    "argv,expected",
    [
        (("--surface", "torus", "pi1"), "pi1: Z^4"),
        (("--surface", "sphere", "pi1"), "pi1: Z (+) Z_2"),
        (("--surface", "closed genus=2", "pi1", "--word", "a1"), "pi1: Z^3"),
        (("--surface", "closed genus=2", "pi1", "--word", "f"), "pi1: Z (+) pi1STF"),
        (("--surface", "plane", "pi1", "--word", "f"), "pi1: Z^2"),
        (("--surface", "klein", "pi1", "--word", "d"), "pi1: Z^2"),
        (("--surface", "klein", "pi1", "--word", "c"), "pi1: Z^4"),
        (
            ("--surface", "nonorientable genus=3", "pi1", "--flags", "preserving=yes,base_trivial=yes,stf_trivial=no"),
            "pi1: Z (+) pi1presSTF",
        ),
        (("--surface", "sphere", "pin", "--n", "3"), "pi3: pi3(S2) (+) pi4(S2)"),
        (("--surface", "torus", "pin", "--n", "2"), "pi2: 0"),
        (("--surface", "torus", "cstf"), "pi1_cstf: Idx2(Z^4)"),
        (("--surface", "klein", "centralizer", "--word", "d^2"), "consistent: yes"),
    ],
)
def test_homotopy(run, argv, expected):
    status, out, _ = run("homotopy", *argv)
    assert status == 0
    assert expected in out


def test_homotopy_from_front_file(run, fixture_path):
    status, out, _ = run("homotopy", "--surface", "klein", "pi1", "--front", fixture_path("klein_d2.front"))
    assert status == 0
    assert "pi1: Z (+) pi1STK" in out


def test_homotopy_errors(run, fixture_path):
    assert run("homotopy", "--surface", "nonorientable genus=3", "pi1")[0] == 2
    assert run("homotopy", "--surface", "sphere", "pin", "--n", "1")[0] == 2
    assert run("homotopy", "--surface", "torus", "pi1", "--word", "a1", "--flags", "preserving=yes,base_trivial=yes")[0] == 1
    assert run("homotopy", "--surface", "torus", "pi1", "--front", fixture_path("klein_d2.front"))[0] == 2


def test_classes(run, fixture_path):
    status, out, _ = run("classes", "--surface", "torus", "--key", "K+[b1 | a1]")
    assert status == 0
    assert "key: K+[a1 | b1]" in out
    status, out, _ = run("classes", "--surface", "torus", "--key", "Pi[a1 | b1 | or=0 | mu=0]", "--g-map")
    assert "g_map: T[1 | a1 | b1 | mu=0]" in out
    status, out, _ = run("classes", "--surface", "torus", "--key", "K+[a1 | b1]", "--order-with", "K+[a1 f^2 | b1 f^-2]")
    assert "order_index: 2" in out
    status, out, _ = run("classes", fixture_path("torus_eight.front"))
    assert "D1: K+[a1 | b1 f]" in out


def test_classes_errors(run):
    assert run("classes", "--surface", "torus", "--key", "K+[a1]")[0] == 2
    assert run("classes", "--key", "K+[a1 | b1]")[0] == 2
    assert run("classes", "--surface", "torus", "--key", "K+[a1 | b1]", "--g-map")[0] == 1
    assert run("classes", "--surface", "klein", "--key", "K-[c | c]")[0] == 1


def test_classes_on_klein_bottle_skip_kminus(run, fixture_path):
    status, out, _ = run("--json", "classes", fixture_path("klein_d2.front"))
    assert status == 0
    data = json.loads(out)
    assert "Kplus" in data["D1"] and "Kminus" not in data["D1"]


def test_unknown_command(run):
    status, _, _ = run("frobnicate")
    assert status == 2


def test_report_add_keeps_value_and_text():
    report = Report("classes")
    report.add("order_index", None, "-")
    report.add("key", "K+[a1 | b1]")
    assert report.data == {"order_index": None, "key": "K+[a1 | b1]"}
    assert report.lines == ["order_index: -", "key: K+[a1 | b1]"]
    assert render(report) == "# classes\norder_index: -\nkey: K+[a1 | b1]\n"

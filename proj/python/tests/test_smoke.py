import pytest

import idealcore


SATGAP = dict(vars=["x1", "x2"], relations=["x1^2*x2^2", "x2^5"])


def test_core_stratified_generators():
    report = idealcore.core(**SATGAP)
    assert report["result"]["generators"] == ["x1^4", "x1^3*x2", "x1*x2^3"]
    assert report["diagnostics"]["r"] == 4
    assert len(report["diagnostics"]["strata"]) == 2
    assert report["exit_code"] == 0


def test_methods_bracket_each_other():
    lo = idealcore.core(**SATGAP, method="saturation")
    hi = idealcore.core(**SATGAP, method="generic-contraction")
    assert lo["result"]["generators"] == ["x1^4", "x1^3*x2", "x1*x2^4"]
    assert "x2^4" in hi["result"]["generators"]


def test_analyze_and_hilbert():
    report = idealcore.analyze(**SATGAP)
    assert report["diagnostics"]["r"] == 4
    assert idealcore.hilbert(**SATGAP)[:6] == [1, 2, 3, 4, 4, 3]


def test_prime_field_bruteforce_oracle():
    report = idealcore.core(
        vars=["x1", "x2"],
        relations=["x1^2*x2+x2^3", "x2^4"],
        field="Fp 13",
        method="bruteforce",
        sample="exhaustive",
    )
    assert report["diagnostics"]["oracle_agreement"] is True


def test_local_conductor_route():
    report = idealcore.core(
        vars=["X", "Y"],
        relations=["X^4-Y^3"],
        weights=[3, 4],
        ideal=["X", "Y"],
        reduction=["X"],
        method="onedim",
    )
    gens = report["result"]["generators"]
    assert "X^3" in gens and "X^2*Y" in gens and "X*Y^2" in gens


def test_check_battery():
    report = idealcore.check(**SATGAP)
    assert report["exit_code"] == 0
    assert "FAIL" not in report["report"]


def test_job_text_round_trip():
    text = idealcore.job_text(**SATGAP, ideal=["x1", "x2"], seed=5)
    assert idealcore.print_job(text) == idealcore.print_job(
        idealcore.print_job(text))


def test_errors_surface_as_python_exceptions():
    with pytest.raises(idealcore.JobParseError):
        idealcore.run(idealcore.job_text(["x"], ["q^2"]))
    with pytest.raises(idealcore.InconclusiveWindow):
        idealcore.analyze(**SATGAP, n_max=2)
    with pytest.raises(idealcore.EngineError):
        idealcore.core(**SATGAP, method="divination")

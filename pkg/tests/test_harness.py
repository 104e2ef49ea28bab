import pytest

from numlam import (
    App,
    F,
    Fuel,
    I,
    Lam,
    NumeralSystem,
    NumericFunction,
    T,
    Var,
    app,
    beta_eta_eq,
    builtin_system,
    check_definable,
    check_predecessor,
    check_successor,
    check_system,
    check_zero_test,
    church,
    church_k_term,
    k_function,
    phi_from_zero_test,
    spz_from_k,
    zero_test_from_phi,
)

CHURCH = builtin_system("church")
CHURCH_W10 = Lam("n", app(Var("n"), Lam("x", T), F))


def test_check_system_passes_for_barendregt_and_bprime():
    assert check_system(builtin_system("barendregt"), 20).overall == "pass"
    assert check_system(builtin_system("bprime"), 20).overall == "pass"


def test_check_system_reports_church_eta_anomaly():
    # ⌜1⌝ = λf.λx.(f x) contains an eta-redex, so the normality case at
    # n=1 fails; closedness and distinctness hold throughout.
    report = check_system(CHURCH, 20)
    assert report.overall == "fail"
    bad = [c.label for c in report.cases if not c.ok]
    assert bad == ["normal n=1"]


def test_check_system_flags_degenerate_distinctness():
    degenerate = NumeralSystem("degenerate", lambda n: I)
    report = check_system(degenerate, 3)
    assert report.overall == "fail"
    distinct = [c for c in report.cases if c.label == "pairwise distinct"]
    assert distinct and not distinct[0].ok


def test_check_system_requires_two_numerals():
    with pytest.raises(ValueError):
        check_system(CHURCH, 1)


def test_check_successor_rejects_wrong_combinator():
    report = check_successor(builtin_system("bprime"), builtin_system("b").successor, 2)
    assert report.overall == "fail"
    assert not report.cases[0].ok
    assert report.cases[0].witness  # the wrong normal form is shown


def test_check_definable_identity_for_every_system():
    points = [(n,) for n in range(10)]
    identity = NumericFunction(1, lambda n: n)
    for name in ("church", "barendregt", "a", "b", "bprime", "tilde", "c"):
        sys_ = builtin_system(name)
        assert check_definable(sys_, I, identity, points).overall == "pass"


def test_check_definable_successor_on_church():
    succ_fn = NumericFunction(1, lambda n: n + 1)
    points = [(n,) for n in range(20)]
    report = check_definable(CHURCH, CHURCH.successor, succ_fn, points)
    assert report.overall == "pass"


def test_check_definable_zero_indicator_via_zero_test():
    step = NumericFunction(1, lambda n: 0 if n == 0 else 1)
    fterm = Lam("n", app(CHURCH.zero_test, Var("n"), church(0), church(1)))
    points = [(n,) for n in range(20)]
    assert check_definable(CHURCH, fterm, step, points).overall == "pass"


def test_check_definable_arity_mismatch():
    with pytest.raises(ValueError):
        check_definable(CHURCH, I, k_function(), [(1,)])


@pytest.mark.parametrize("name", ["barendregt", "church", "b"])
def test_phi_from_zero_test_defines_the_step_function(name):
    sys_ = builtin_system(name)
    fterm = phi_from_zero_test(sys_, sys_.zero_test)
    step = NumericFunction(1, lambda n: 0 if n == 0 else 1)
    points = [(n,) for n in range(20)]
    assert check_definable(sys_, fterm, step, points).overall == "pass"


@pytest.mark.parametrize("name", ["barendregt", "church", "b"])
def test_lemma_round_trip_recovers_a_zero_test(name):
    sys_ = builtin_system(name)
    fphi = phi_from_zero_test(sys_, sys_.zero_test)
    recovered = zero_test_from_phi(sys_, fphi, sys_.zero_test)
    assert check_zero_test(sys_, recovered, 20).overall == "pass"


def test_zero_test_from_phi_with_bad_discriminator_fails():
    fphi = phi_from_zero_test(CHURCH, CHURCH.zero_test)
    bogus = zero_test_from_phi(CHURCH, fphi, Lam("x", T))
    report = check_zero_test(CHURCH, bogus, 5)
    assert report.overall == "fail"
    assert report.cases[0].ok  # n=0 still maps to T
    assert not report.cases[1].ok


def test_k_function_values():
    k = k_function().eval
    assert k(4, 0) == 5
    assert k(0, 0) == 1
    assert k(3, 3) == 0
    assert k(2, 5) == 3
    assert k(7, 7) == 0


def test_church_k_term_spot_checks():
    kterm = church_k_term()
    for n, m in [(4, 0), (2, 5), (7, 7), (0, 0), (0, 3)]:
        expected = church(k_function().eval(n, m))
        assert beta_eta_eq(app(kterm, church(n), church(m)), expected).is_equal


def test_w10_discriminator():
    assert beta_eta_eq(App(CHURCH_W10, church(0)), F).is_equal
    assert beta_eta_eq(App(CHURCH_W10, church(1)), T).is_equal


def test_spz_from_k_produces_working_combinators():
    s, p, z = spz_from_k(CHURCH, church_k_term(), CHURCH_W10)
    assert check_successor(CHURCH, s, 8).overall == "pass"
    assert check_predecessor(CHURCH, p, 8).overall == "pass"
    assert check_zero_test(CHURCH, z, 8).overall == "pass"


def test_derived_predecessor_unconstrained_at_zero():
    _, p, _ = spz_from_k(CHURCH, church_k_term(), CHURCH_W10)
    # k(0, 1) = 1, so applying the derived predecessor to d_0 yields d_1;
    # the contract only speaks about successor numerals.
    assert beta_eta_eq(App(p, church(0)), church(1)).is_equal


def test_reports_never_pass_with_unknowns():
    report = check_successor(CHURCH, CHURCH.successor, 5, Fuel(1))
    assert report.unknown > 0
    assert report.overall == "inconclusive"


def test_report_counts_and_serialization():
    report = check_zero_test(CHURCH, CHURCH.zero_test, 5)
    assert report.passed == 5 and report.failed == 0 and report.unknown == 0
    payload = report.to_dict()
    assert payload["format"] == 1
    assert payload["overall"] == "pass"
    assert payload["counts"] == {"passed": 5, "failed": 0, "unknown": 0}
    assert [c["label"] for c in payload["cases"]][:2] == ["n=0", "n=1"]


def test_numeric_function_requires_positive_arity():
    with pytest.raises(ValueError):
        NumericFunction(0, lambda: 0)

"""Executable checks for numeral systems.

Everything here reduces actual terms: a check passes only when the engine
reaches both normal forms and they agree up to alpha.  Checks for distinct
indices are independent pure computations; reports aggregate the verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Sequence

from .report import CheckCase, CheckReport, eq_case
from .reduction import DEFAULT_FUEL, Fuel, is_beta_eta_normal
from .terms import App, F, Lam, T, Term, Var, app, is_closed, lam, to_indexed

if TYPE_CHECKING:
    from .numerals import NumeralSystem

DEFAULT_UPTO = 50


@dataclass(frozen=True)
class NumericFunction:
    """A total function on naturals with a fixed arity."""

    arity: int
    eval: Callable[..., int]

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("arity must be at least 1")


# ---------------------------------------------------------------------------
# System well-formedness and the three combinator contracts

def check_system(sys: "NumeralSystem", upto: int = DEFAULT_UPTO, fuel: Fuel = DEFAULT_FUEL) -> CheckReport:
    """Closedness, beta-eta-normality, and pairwise alpha-distinctness of the
    numerals below `upto`."""
    if upto < 2:
        raise ValueError("upto must be at least 2")
    cases = []
    seen: dict[tuple, int] = {}
    collision = None
    for n in range(upto):
        t = sys.numeral(n)
        cases.append(CheckCase(f"closed n={n}", is_closed(t)))
        cases.append(CheckCase(f"normal n={n}", is_beta_eta_normal(t)))
        key = to_indexed(t)
        if key in seen and collision is None:
            collision = (seen[key], n)
        seen[key] = n
    if collision is None:
        cases.append(CheckCase("pairwise distinct", True))
    else:
        cases.append(
            CheckCase(
                "pairwise distinct",
                False,
                witness=f"n={collision[0]} and n={collision[1]} coincide",
            )
        )
    return CheckReport(f"{sys.name} well-formedness", tuple(cases))


def check_successor(sys: "NumeralSystem", s: Term, upto: int = DEFAULT_UPTO, fuel: Fuel = DEFAULT_FUEL) -> CheckReport:
    cases = [
        eq_case(f"n={n}", app(s, sys.numeral(n)), sys.numeral(n + 1), fuel)
        for n in range(upto)
    ]
    return CheckReport(f"{sys.name} successor", tuple(cases))


def check_predecessor(sys: "NumeralSystem", p: Term, upto: int = DEFAULT_UPTO, fuel: Fuel = DEFAULT_FUEL) -> CheckReport:
    cases = [
        eq_case(f"n={n + 1}", app(p, sys.numeral(n + 1)), sys.numeral(n), fuel)
        for n in range(upto)
    ]
    return CheckReport(f"{sys.name} predecessor", tuple(cases))


def check_zero_test(sys: "NumeralSystem", z: Term, upto: int = DEFAULT_UPTO, fuel: Fuel = DEFAULT_FUEL) -> CheckReport:
    cases = [eq_case("n=0", app(z, sys.numeral(0)), T, fuel)]
    for n in range(1, upto):
        cases.append(eq_case(f"n={n}", app(z, sys.numeral(n)), F, fuel))
    return CheckReport(f"{sys.name} zero test", tuple(cases))


def check_definable(
    sys: "NumeralSystem",
    fterm: Term,
    phi: NumericFunction,
    points: Sequence[tuple[int, ...]],
    fuel: Fuel = DEFAULT_FUEL,
) -> CheckReport:
    """Check (fterm d_{n1} … d_{np}) against d_{phi(n1,…,np)} at each point."""
    cases = []
    for point in points:
        if len(point) != phi.arity:
            raise ValueError(f"point {point} does not match arity {phi.arity}")
        lhs = app(fterm, *[sys.numeral(i) for i in point])
        rhs = sys.numeral(phi.eval(*point))
        label = ",".join(str(i) for i in point)
        cases.append(eq_case(f"({label})", lhs, rhs, fuel))
    return CheckReport(f"{sys.name} definability", tuple(cases))


# ---------------------------------------------------------------------------
# Zero test as a numeric function, in both directions

def phi_from_zero_test(sys: "NumeralSystem", z: Term) -> Term:
    """Turn a zero test into a term defining the function 0 ↦ 0, n+1 ↦ 1:
    λn.(z n d_0 d_1)."""
    return Lam("n", app(z, Var("n"), sys.numeral(0), sys.numeral(1)))


def zero_test_from_phi(sys: "NumeralSystem", fphi: Term, w01: Term) -> Term:
    """Recover a zero test from a term defining 0 ↦ 0, n+1 ↦ 1, given a
    discriminator w01 sending d_0 to T and d_1 to F: λn.(w01 (fphi n))."""
    return Lam("n", App(w01, App(fphi, Var("n"))))


# ---------------------------------------------------------------------------
# The binary function that packs successor, predecessor, and zero test

def k_function() -> NumericFunction:
    """k(n, m) = n+1 when m = 0, |n - m| otherwise."""

    def k(n: int, m: int) -> int:
        return n + 1 if m == 0 else abs(n - m)

    return NumericFunction(2, k)


def church_k_term() -> Term:
    """A closed term defining k on the Church system, built from the Church
    successor, predecessor, zero test, addition, and truncated subtraction."""
    from .numerals import builtin_system

    sys = builtin_system("church")
    s, p, z = sys.successor, sys.predecessor, sys.zero_test
    add = lam(
        "m", "n", "f", "x",
        app(Var("m"), Var("f"), app(Var("n"), Var("f"), Var("x"))),
    )
    # monus m n: apply the predecessor n times to m
    monus = lam("m", "n", app(Var("n"), p, Var("m")))
    absdiff = lam(
        "m", "n",
        app(add, app(monus, Var("m"), Var("n")), app(monus, Var("n"), Var("m"))),
    )
    return lam(
        "n", "m",
        app(
            app(z, Var("m")),
            app(s, Var("n")),
            app(absdiff, Var("n"), Var("m")),
        ),
    )


def spz_from_k(sys: "NumeralSystem", kterm: Term, w10: Term) -> tuple[Term, Term, Term]:
    """Derive successor, predecessor, and zero test from a term defining k.

    s n = k(n, 0), p n = k(n, 1), and z n tests k(n, n) with a discriminator
    w10 sending d_1 to T and d_0 to F.  The derived predecessor satisfies the
    standard contract on successor numerals only: k(0, 1) = 1 means (p d_0)
    is d_1, which the contract does not constrain.
    """
    d0 = sys.numeral(0)
    d1 = sys.numeral(1)
    s = Lam("n", app(kterm, Var("n"), d0))
    p = Lam("n", app(kterm, Var("n"), d1))
    z = Lam("n", App(w10, app(kterm, Var("n"), Var("n"))))
    return s, p, z

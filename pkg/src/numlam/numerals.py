"""The built-in numeral systems and their successor/predecessor/zero-test
combinators, plus the generator notion for sequences of closed normal terms.

A numeral system maps every natural to a closed term; the three combinator
slots hold whatever closed terms are known for that system (None where none
is shipped).  The contract for each slot is checked by the harness module:

    successor    (S d_n)   beta-eta-equal  d_{n+1}
    predecessor  (P d_{n+1})               d_n
    zero test    (Z d_0) = T,  (Z d_{n+1}) = F
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .report import CheckReport, eq_case
from .reduction import DEFAULT_FUEL, Fuel
from .terms import App, F, I, Lam, T, Term, Var, app, lam, mk_pair, mk_tuple


class UnknownSystemError(ValueError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown numeral system {name!r}")


@dataclass(frozen=True)
class NumeralSystem:
    name: str
    numeral: Callable[[int], Term]
    successor: Term | None = None
    predecessor: Term | None = None
    zero_test: Term | None = None


@dataclass(frozen=True)
class SequenceSpec:
    """A sequence of closed normal terms, indexed from 1."""

    name: str
    element: Callable[[int], Term]


# ---------------------------------------------------------------------------
# Numeral constructors

def church(n: int) -> Term:
    """λf.λx.(f (f … (f x))) with n occurrences of f."""
    body: Term = Var("x")
    for _ in range(n):
        body = App(Var("f"), body)
    return Lam("f", Lam("x", body))


def barendregt(n: int) -> Term:
    """I for zero, then each successor wraps a pair ⟨F, previous⟩."""
    t: Term = I
    for _ in range(n):
        t = mk_pair(F, t)
    return t


def a_numeral(n: int) -> Term:
    """n abstractions over I: λx1…λxn.I."""
    t: Term = I
    for i in range(n, 0, -1):
        t = Lam(f"x{i}", t)
    return t


def b_numeral(n: int) -> Term:
    """⟨T, I⟩ for zero, ⟨F, a_{n-1}⟩ for n ≥ 1."""
    if n == 0:
        return mk_pair(T, I)
    return mk_pair(F, a_numeral(n - 1))


def bprime_numeral(n: int) -> Term:
    """The b numerals with indices 0 and 1 swapped."""
    if n == 0:
        return b_numeral(1)
    if n == 1:
        return b_numeral(0)
    return b_numeral(n)


def tilde_numeral(n: int) -> Term:
    """I for zero, λx.(x x…x) with n+1 occurrences for n ≥ 1."""
    if n == 0:
        return I
    body: Term = Var("x")
    for _ in range(n):
        body = App(body, Var("x"))
    return Lam("x", body)


def c_numeral(n: int, e: SequenceSpec) -> Term:
    """I for zero, then ⟨c_{n-1}, e_n⟩."""
    t: Term = I
    for i in range(1, n + 1):
        t = mk_pair(t, e.element(i))
    return t


CHURCH_SEQUENCE = SequenceSpec("church", church)


# ---------------------------------------------------------------------------
# Combinators

def _church_successor() -> Term:
    return lam("n", "f", "x", app(Var("f"), app(Var("n"), Var("f"), Var("x"))))


def _church_predecessor() -> Term:
    # Pair iteration: step a pair (k, k-1) upward n times from (0, 0),
    # then keep the second component.
    s = _church_successor()
    step = Lam("a", mk_pair(app(s, app(Var("a"), T)), app(Var("a"), T)))
    return Lam("n", app(Var("n"), step, mk_pair(church(0), church(0)), F))


def _church_zero_test() -> Term:
    return Lam("n", app(Var("n"), Lam("x", F), T))


def _barendregt_system() -> NumeralSystem:
    return NumeralSystem(
        "barendregt",
        barendregt,
        successor=Lam("x", mk_pair(F, Var("x"))),
        predecessor=Lam("x", App(Var("x"), F)),
        zero_test=Lam("x", App(Var("x"), T)),
    )


def _church_system() -> NumeralSystem:
    return NumeralSystem(
        "church",
        church,
        successor=_church_successor(),
        predecessor=_church_predecessor(),
        zero_test=_church_zero_test(),
    )


def _a_system() -> NumeralSystem:
    return NumeralSystem(
        "a",
        a_numeral,
        successor=lam("n", "x", Var("n")),
        predecessor=Lam("n", App(Var("n"), I)),
    )


def _b_system() -> NumeralSystem:
    succ = Lam(
        "n",
        mk_pair(
            F,
            app(Var("n"), T, a_numeral(0), Lam("x", App(Var("n"), F))),
        ),
    )
    return NumeralSystem(
        "b",
        b_numeral,
        successor=succ,
        zero_test=Lam("n", App(Var("n"), T)),
    )


def _bprime_system() -> NumeralSystem:
    return NumeralSystem("bprime", bprime_numeral)


def _tilde_system() -> NumeralSystem:
    flip = lam("x", "y", App(Var("y"), Var("x")))
    # In the predecessor, the inner combinators deliberately reference the
    # x bound at the top: they are built inside that scope, capture intended.
    shift = lam("a", "b", "c", "d", app(Var("d"), Var("a"), App(Var("c"), Var("x"))))
    unwind = Lam("y", app(Var("y"), shift, I))
    return NumeralSystem(
        "tilde",
        tilde_numeral,
        successor=lam("n", "x", app(Var("n"), Var("x"), Var("x"))),
        predecessor=lam("n", "x", app(Var("n"), unwind, F)),
        zero_test=Lam("n", app(Var("n"), flip, I, I, T)),
    )


def _c_system(sequence: SequenceSpec) -> NumeralSystem:
    return NumeralSystem(
        f"c[{sequence.name}]",
        lambda n: c_numeral(n, sequence),
        predecessor=Lam("n", App(Var("n"), T)),
        zero_test=Lam("n", app(Var("n"), lam("x", "y", I), T, F, T)),
    )


SYSTEM_NAMES = ("church", "barendregt", "a", "b", "bprime", "tilde", "c")


def builtin_system(name: str, sequence: SequenceSpec | None = None) -> NumeralSystem:
    """Look up a built-in system by name.  `sequence` applies only to "c";
    it defaults to the Church-numeral sequence."""
    if sequence is not None and name != "c":
        raise ValueError("a sequence can only be supplied for the c system")
    builders = {
        "church": _church_system,
        "barendregt": _barendregt_system,
        "a": _a_system,
        "b": _b_system,
        "bprime": _bprime_system,
        "tilde": _tilde_system,
        "c": lambda: _c_system(sequence or CHURCH_SEQUENCE),
    }
    builder = builders.get(name)
    if builder is None:
        raise UnknownSystemError(name)
    return builder()


# ---------------------------------------------------------------------------
# Generators

def is_generator(a: Term, u: SequenceSpec, upto: int, fuel: Fuel = DEFAULT_FUEL) -> CheckReport:
    """Check (A I) against U_1 and (A ⟨U_1,…,U_n⟩) against U_{n+1} for every
    1 ≤ n < upto."""
    if upto < 1:
        raise ValueError("upto must be at least 1")
    elements = [u.element(i) for i in range(1, upto + 1)]
    cases = [eq_case("base", App(a, I), elements[0], fuel)]
    for n in range(1, upto):
        cases.append(eq_case(f"n={n}", App(a, mk_tuple(elements[:n])), elements[n], fuel))
    return CheckReport(f"generator for {u.name}", tuple(cases))

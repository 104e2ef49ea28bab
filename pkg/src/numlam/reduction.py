"""Normal-order beta reduction, eta postnormalization, and head reduction.

All reductions are fuel-bounded: beta-normalization of an arbitrary term may
diverge, so every driver returns either a normal form with its step count or
the partial term left when the budget ran out.  Equality of terms is the
three-valued `beta_eta_eq`: Equal and Distinct are definitive (both sides
reached beta-eta-normal form), Unknown means fuel ran out and is never
collapsed to a definite answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .terms import App, Lam, Term, Var, alpha_eq, occurs_free, substitute


class NotBetaNormalError(ValueError):
    """eta_normalize was handed a term that still contains a beta-redex."""


DEFAULT_MAX_STEPS = 1_000_000


@dataclass(frozen=True, slots=True)
class Fuel:
    max_steps: int = DEFAULT_MAX_STEPS

    def __post_init__(self):
        if self.max_steps < 1:
            raise ValueError("fuel must allow at least one step")


DEFAULT_FUEL = Fuel()


@dataclass(frozen=True, slots=True)
class Normal:
    """A normal form, with the beta steps spent reaching it.  Eta
    contractions performed after beta-normalization are counted apart."""

    term: Term
    steps: int
    eta_steps: int = 0


@dataclass(frozen=True, slots=True)
class OutOfFuel:
    term: Term
    steps: int


ReductionOutcome = Normal | OutOfFuel


# ---------------------------------------------------------------------------
# Beta

def beta_step_normal_order(t: Term) -> Term | None:
    """Contract the leftmost-outermost beta-redex; None iff t is beta-normal.

    The redex chosen is the first found depth-first visiting each node
    before its function child before its argument child.
    """
    if isinstance(t, Var):
        return None
    if isinstance(t, Lam):
        body = beta_step_normal_order(t.body)
        return None if body is None else Lam(t.binder, body)
    if isinstance(t.fn, Lam):
        return substitute(t.fn.body, {t.fn.binder: t.arg})
    fn = beta_step_normal_order(t.fn)
    if fn is not None:
        return App(fn, t.arg)
    arg = beta_step_normal_order(t.arg)
    return None if arg is None else App(t.fn, arg)


def beta_normalize(t: Term, fuel: Fuel = DEFAULT_FUEL) -> ReductionOutcome:
    steps = 0
    while steps < fuel.max_steps:
        nxt = beta_step_normal_order(t)
        if nxt is None:
            return Normal(t, steps)
        t = nxt
        steps += 1
    if beta_step_normal_order(t) is None:
        return Normal(t, steps)
    return OutOfFuel(t, steps)


def _has_beta_redex(t: Term) -> bool:
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Lam):
            stack.append(node.body)
        elif isinstance(node, App):
            if isinstance(node.fn, Lam):
                return True
            stack.append(node.fn)
            stack.append(node.arg)
    return False


# ---------------------------------------------------------------------------
# Eta

def _eta(t: Term) -> tuple[Term, int]:
    if isinstance(t, Var):
        return t, 0
    if isinstance(t, App):
        fn, a = _eta(t.fn)
        arg, b = _eta(t.arg)
        if fn is t.fn and arg is t.arg:
            return t, 0
        return App(fn, arg), a + b
    body, n = _eta(t.body)
    if (
        isinstance(body, App)
        and isinstance(body.arg, Var)
        and body.arg.name == t.binder
        and not occurs_free(t.binder, body.fn)
    ):
        return body.fn, n + 1
    if body is t.body:
        return t, n
    return Lam(t.binder, body), n


def eta_normalize(t: Term) -> Term:
    """Contract eta-redexes to a fixpoint.  Requires a beta-normal input;
    on such input the result is beta-eta-normal (contracting λx.(M x)
    inside a beta-normal term cannot create a beta-redex, since an applied
    abstraction would already have been one)."""
    if _has_beta_redex(t):
        raise NotBetaNormalError("input contains a beta-redex")
    return _eta(t)[0]


def beta_eta_normalize(t: Term, fuel: Fuel = DEFAULT_FUEL) -> ReductionOutcome:
    out = beta_normalize(t, fuel)
    if isinstance(out, OutOfFuel):
        return out
    term, eta_steps = _eta(out.term)
    return Normal(term, out.steps, eta_steps)


def is_beta_eta_normal(t: Term) -> bool:
    """Purely syntactic: no beta-redex and no eta-redex anywhere."""
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Lam):
            body = node.body
            if (
                isinstance(body, App)
                and isinstance(body.arg, Var)
                and body.arg.name == node.binder
                and not occurs_free(node.binder, body.fn)
            ):
                return False
            stack.append(body)
        elif isinstance(node, App):
            if isinstance(node.fn, Lam):
                return False
            stack.append(node.fn)
            stack.append(node.arg)
    return True


# ---------------------------------------------------------------------------
# Equality

@dataclass(frozen=True, slots=True)
class EqVerdict:
    kind: str  # "equal" | "distinct" | "unknown"
    reason: str | None = None

    @property
    def is_equal(self) -> bool:
        return self.kind == "equal"

    @property
    def is_distinct(self) -> bool:
        return self.kind == "distinct"

    @property
    def is_unknown(self) -> bool:
        return self.kind == "unknown"

    def __str__(self) -> str:
        if self.kind == "unknown" and self.reason:
            return f"Unknown ({self.reason})"
        return self.kind.capitalize()


EQUAL = EqVerdict("equal")
DISTINCT = EqVerdict("distinct")


def unknown(reason: str) -> EqVerdict:
    return EqVerdict("unknown", reason)


def beta_eta_eq(t1: Term, t2: Term, fuel: Fuel = DEFAULT_FUEL) -> EqVerdict:
    """Equal iff both sides reach beta-eta-normal forms that are alpha-equal;
    Distinct iff both normalize and the forms differ; Unknown otherwise."""
    o1 = beta_eta_normalize(t1, fuel)
    o2 = beta_eta_normalize(t2, fuel)
    stuck = []
    if isinstance(o1, OutOfFuel):
        stuck.append(f"left side out of fuel after {o1.steps} steps")
    if isinstance(o2, OutOfFuel):
        stuck.append(f"right side out of fuel after {o2.steps} steps")
    if stuck:
        return unknown("; ".join(stuck))
    return EQUAL if alpha_eq(o1.term, o2.term) else DISTINCT


# ---------------------------------------------------------------------------
# Head reduction

@dataclass(frozen=True, slots=True)
class HeadTrace:
    """Successive states of a head reduction; length is the step count."""

    states: tuple[Term, ...]

    @property
    def length(self) -> int:
        return len(self.states) - 1

    @property
    def final(self) -> Term:
        return self.states[-1]


@dataclass(frozen=True, slots=True)
class HeadResult:
    trace: HeadTrace
    reached_hnf: bool


def head_redex(t: Term) -> Term | None:
    """The head redex (λx.U V) of t, or None when t is in head normal form
    λx1…λxn.(x V1…Vm)."""
    while isinstance(t, Lam):
        t = t.body
    redex = None
    while isinstance(t, App):
        redex = t
        t = t.fn
    if isinstance(t, Lam) and redex is not None:
        return redex
    return None


def is_head_normal_form(t: Term) -> bool:
    return head_redex(t) is None


def head_step(t: Term) -> Term | None:
    """Contract the head redex; None iff t is in head normal form."""
    binders = []
    body = t
    while isinstance(body, Lam):
        binders.append(body.binder)
        body = body.body
    spine = []
    head = body
    while isinstance(head, App):
        spine.append(head.arg)
        head = head.fn
    if not (isinstance(head, Lam) and spine):
        return None
    spine.reverse()
    new = substitute(head.body, {head.binder: spine[0]})
    for a in spine[1:]:
        new = App(new, a)
    for b in reversed(binders):
        new = Lam(b, new)
    return new


def head_reduce(t: Term, fuel: Fuel = DEFAULT_FUEL) -> HeadResult:
    """Iterate head_step until head normal form or the fuel runs out.
    The trace length is the head-reduction length between the endpoints."""
    states = [t]
    for _ in range(fuel.max_steps):
        nxt = head_step(t)
        if nxt is None:
            return HeadResult(HeadTrace(tuple(states)), True)
        t = nxt
        states.append(t)
    done = head_step(t) is None
    return HeadResult(HeadTrace(tuple(states)), done)


def solvable(t: Term, fuel: Fuel = DEFAULT_FUEL) -> int | None:
    """Head steps to head normal form if reached within fuel, else None.

    None means unknown: head-reduction termination is undecidable, so this
    never claims a term unsolvable.
    """
    result = head_reduce(t, fuel)
    return result.trace.length if result.reached_hnf else None

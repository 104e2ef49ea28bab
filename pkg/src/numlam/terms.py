"""Untyped lambda terms: syntax, alpha-equivalence, substitution, combinators.

Terms are immutable trees of `Var`, `Lam`, and `App` nodes carrying string
identifiers.  Structural equality of `Term` values is *not* alpha-equivalence;
use `alpha_eq`, which compares the nameless (binder-depth indexed) forms
produced by `to_indexed`.  All operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Lam:
    binder: str
    body: "Term"


@dataclass(frozen=True, slots=True)
class App:
    fn: "Term"
    arg: "Term"


Term = Union[Var, Lam, App]

# Nameless form: nested tuples, one of
#   ("bv", index)   bound variable, 0 = innermost binder
#   ("fv", name)    free variable
#   ("lam", body)
#   ("app", fn, arg)
# Tuples are hashable and compare structurally, so IndexTerm equality is
# exactly alpha-equivalence of the source terms.
IndexTerm = tuple

Substitution = Mapping[str, Term]


# ---------------------------------------------------------------------------
# Construction helpers

def lam(*parts) -> Term:
    """lam("x", "y", body) builds λx.λy.body."""
    *binders, body = parts
    if not binders:
        raise ValueError("lam needs at least one binder")
    for b in reversed(binders):
        body = Lam(b, body)
    return body


def app(fn: Term, *args: Term) -> Term:
    """Left-nested application: app(f, a, b) builds ((f a) b)."""
    for a in args:
        fn = App(fn, a)
    return fn


I = Lam("x", Var("x"))
T = Lam("x", Lam("y", Var("x")))
F = Lam("x", Lam("y", Var("y")))


def fresh_name(base: str, avoid: Iterable[str]) -> str:
    """Append primes to `base` until the name avoids the given set."""
    avoid = set(avoid)
    name = base
    while name in avoid:
        name += "'"
    return name


def mk_pair(m: Term, n: Term) -> Term:
    """The pair of m and n: λx.(x m n), binder chosen fresh for both."""
    x = fresh_name("x", free_vars(m) | free_vars(n))
    return Lam(x, App(App(Var(x), m), n))


def mk_tuple(us: list[Term]) -> Term:
    """Left fold of mk_pair seeded with I; the empty tuple is I itself."""
    t: Term = I
    for u in us:
        t = mk_pair(t, u)
    return t


# ---------------------------------------------------------------------------
# Structure queries

def size(t: Term) -> int:
    """Node count of the term tree."""
    total = 0
    stack = [t]
    while stack:
        node = stack.pop()
        total += 1
        if isinstance(node, Lam):
            stack.append(node.body)
        elif isinstance(node, App):
            stack.append(node.fn)
            stack.append(node.arg)
    return total


def free_vars(t: Term) -> set[str]:
    out: set[str] = set()
    bound: dict[str, int] = {}

    def go(node: Term) -> None:
        if isinstance(node, Var):
            if not bound.get(node.name):
                out.add(node.name)
        elif isinstance(node, Lam):
            bound[node.binder] = bound.get(node.binder, 0) + 1
            go(node.body)
            bound[node.binder] -= 1
        else:
            go(node.fn)
            go(node.arg)

    go(t)
    return out


def is_closed(t: Term) -> bool:
    return not free_vars(t)


def occurs_free(name: str, t: Term) -> bool:
    """True iff `name` has a free occurrence in t (early-exit walk)."""
    if isinstance(t, Var):
        return t.name == name
    if isinstance(t, Lam):
        return t.binder != name and occurs_free(name, t.body)
    return occurs_free(name, t.fn) or occurs_free(name, t.arg)


# ---------------------------------------------------------------------------
# Nameless form and alpha-equivalence

def to_indexed(t: Term) -> IndexTerm:
    """Convert to the nameless form; free variables keep their names."""
    levels: dict[str, list[int]] = {}

    def go(node: Term, depth: int) -> IndexTerm:
        if isinstance(node, Var):
            stack = levels.get(node.name)
            if stack:
                return ("bv", depth - 1 - stack[-1])
            return ("fv", node.name)
        if isinstance(node, Lam):
            levels.setdefault(node.binder, []).append(depth)
            body = go(node.body, depth + 1)
            levels[node.binder].pop()
            return ("lam", body)
        return ("app", go(node.fn, depth), go(node.arg, depth))

    return go(t, 0)


def alpha_eq(t1: Term, t2: Term) -> bool:
    return to_indexed(t1) == to_indexed(t2)


# ---------------------------------------------------------------------------
# Substitution

def substitute(t: Term, s: Substitution) -> Term:
    """Simultaneous capture-avoiding substitution of free variables.

    Bound variables are renamed (by appending primes) only when a
    replacement would otherwise be captured, so output is deterministic.
    Unchanged subtrees are shared with the input.
    """
    if not s:
        return t
    fvs = {k: free_vars(v) for k, v in s.items()}
    risk = frozenset().union(*fvs.values()) if fvs else frozenset()

    def go(node: Term, m: dict[str, Term], mfvs, mrisk):
        if isinstance(node, Var):
            return m.get(node.name, node)
        if isinstance(node, App):
            fn = go(node.fn, m, mfvs, mrisk)
            arg = go(node.arg, m, mfvs, mrisk)
            if fn is node.fn and arg is node.arg:
                return node
            return App(fn, arg)
        x = node.binder
        m2 = m
        if x in m2:
            m2 = {k: v for k, v in m2.items() if k != x}
            if not m2:
                return node
        if x in mrisk:
            occurs = free_vars(node.body)
            live = [k for k in m2 if k in occurs]
            if not live:
                return node
            if any(x in mfvs[k] for k in live):
                avoid = set(occurs)
                for k in live:
                    avoid |= mfvs[k]
                fresh = fresh_name(x, avoid)
                m3 = dict(m2)
                m3[x] = Var(fresh)
                fvs3 = dict(mfvs)
                fvs3[x] = {fresh}
                body = go(node.body, m3, fvs3, mrisk | {fresh})
                return Lam(fresh, body)
        body = go(node.body, m2, mfvs, mrisk)
        if body is node.body:
            return node
        return Lam(x, body)

    return go(t, dict(s), fvs, risk)

"""First-order formula trees, sequents, substitution, and formula enumeration.

The formula language has a constructive core (Top, Bot, Not, And, Or, Imp,
Forall, Exists) plus a parallel family of classical constructors (TopC, BotC,
NotC, AndC, OrC, ImpC, ForallC, ExistsC).  A formula is "core" when it
contains no classical constructor.  All values are immutable and hashable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator


# ---------------------------------------------------------------------------
# Terms


class Term:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Var(Term):
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Fun(Term):
    """Function application; a constant is a zero-argument Fun."""

    name: str
    args: tuple[Term, ...] = ()

    def __str__(self) -> str:
        return "%s(%s)" % (self.name, ", ".join(str(a) for a in self.args))


def term_vars(t: Term) -> frozenset[str]:
    if isinstance(t, Var):
        return frozenset((t.name,))
    assert isinstance(t, Fun)
    out: frozenset[str] = frozenset()
    for a in t.args:
        out |= term_vars(a)
    return out


def subterms(t: Term) -> Iterator[Term]:
    """t and all its subterms, outermost first."""
    yield t
    if isinstance(t, Fun):
        for a in t.args:
            yield from subterms(a)


def substitute_term(t: Term, x: str, s: Term) -> Term:
    if isinstance(t, Var):
        return s if t.name == x else t
    assert isinstance(t, Fun)
    if not t.args:
        return t
    return Fun(t.name, tuple(substitute_term(a, x, s) for a in t.args))


# ---------------------------------------------------------------------------
# Formulas


class Formula:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    pred: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True, slots=True)
class Top(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Bot(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True, slots=True)
class Exists(Formula):
    var: str
    body: Formula


# Classical constructors: same shapes, distinct node types.


@dataclass(frozen=True, slots=True)
class TopC(Formula):
    pass


@dataclass(frozen=True, slots=True)
class BotC(Formula):
    pass


@dataclass(frozen=True, slots=True)
class NotC(Formula):
    body: Formula


@dataclass(frozen=True, slots=True)
class AndC(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class OrC(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class ImpC(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class ForallC(Formula):
    var: str
    body: Formula


@dataclass(frozen=True, slots=True)
class ExistsC(Formula):
    var: str
    body: Formula


TOP = Top()
BOT = Bot()

CLASSICAL_NODES = (TopC, BotC, NotC, AndC, OrC, ImpC, ForallC, ExistsC)
BINARY_NODES = (And, Or, Imp, AndC, OrC, ImpC)
QUANT_NODES = (Forall, Exists, ForallC, ExistsC)


def is_atomic(f: Formula) -> bool:
    return isinstance(f, Atom)


def is_core(f: Formula) -> bool:
    """True when f contains no classical constructor."""
    if isinstance(f, CLASSICAL_NODES):
        return False
    if isinstance(f, Not):
        return is_core(f.body)
    if isinstance(f, (And, Or, Imp)):
        return is_core(f.left) and is_core(f.right)
    if isinstance(f, (Forall, Exists)):
        return is_core(f.body)
    return True


def is_propositional(f: Formula) -> bool:
    """True when f contains no quantifier and only zero-argument atoms."""
    if isinstance(f, Atom):
        return not f.args
    if isinstance(f, QUANT_NODES):
        return False
    if isinstance(f, (Not, NotC)):
        return is_propositional(f.body)
    if isinstance(f, BINARY_NODES):
        return is_propositional(f.left) and is_propositional(f.right)
    return True


def size(f: Formula) -> int:
    """Node count."""
    if isinstance(f, (Not, NotC)):
        return 1 + size(f.body)
    if isinstance(f, BINARY_NODES):
        return 1 + size(f.left) + size(f.right)
    if isinstance(f, QUANT_NODES):
        return 1 + size(f.body)
    return 1


def atoms_of(f: Formula) -> frozenset[str]:
    """Predicate names of the atoms occurring in f."""
    if isinstance(f, Atom):
        return frozenset((f.pred,))
    if isinstance(f, (Not, NotC)):
        return atoms_of(f.body)
    if isinstance(f, BINARY_NODES):
        return atoms_of(f.left) | atoms_of(f.right)
    if isinstance(f, QUANT_NODES):
        return atoms_of(f.body)
    return frozenset()


def free_variables(f: Formula) -> frozenset[str]:
    if isinstance(f, Atom):
        out: frozenset[str] = frozenset()
        for t in f.args:
            out |= term_vars(t)
        return out
    if isinstance(f, (Not, NotC)):
        return free_variables(f.body)
    if isinstance(f, BINARY_NODES):
        return free_variables(f.left) | free_variables(f.right)
    if isinstance(f, QUANT_NODES):
        return free_variables(f.body) - {f.var}
    return frozenset()


def fresh_name(base: str, taken: Iterable[str]) -> str:
    """base with enough prime suffixes to avoid every name in taken."""
    taken = set(taken)
    name = base
    while name in taken:
        name += "'"
    return name


def substitute(f: Formula, x: str, t: Term) -> Formula:
    """Capture-avoiding substitution of t for free occurrences of x in f."""
    if isinstance(t, Var) and t.name == x:
        return f
    return _subst(f, x, t, term_vars(t))


def _subst(f: Formula, x: str, t: Term, tvars: frozenset[str]) -> Formula:
    if isinstance(f, Atom):
        if not f.args:
            return f
        return Atom(f.pred, tuple(substitute_term(a, x, t) for a in f.args))
    if isinstance(f, (Not, NotC)):
        body = _subst(f.body, x, t, tvars)
        return f if body is f.body else type(f)(body)
    if isinstance(f, BINARY_NODES):
        left = _subst(f.left, x, t, tvars)
        right = _subst(f.right, x, t, tvars)
        return f if (left is f.left and right is f.right) else type(f)(left, right)
    if isinstance(f, QUANT_NODES):
        if f.var == x:
            return f
        if x not in free_variables(f.body):
            return f
        if f.var in tvars:
            # Renaming forced: the binder would capture a variable of t.
            y = fresh_name(f.var, free_variables(f.body) | tvars | {x})
            body = _subst(f.body, f.var, Var(y), frozenset((y,)))
            return type(f)(y, _subst(body, x, t, tvars))
        return type(f)(f.var, _subst(f.body, x, t, tvars))
    return f  # Top/Bot and classical zero-ary


def alpha_equal(f: Formula, g: Formula) -> bool:
    """Equality up to consistent renaming of bound variables."""
    return _alpha(f, g, {}, {})


def _alpha_term(s: Term, t: Term, env_f: dict, env_g: dict) -> bool:
    if isinstance(s, Var) and isinstance(t, Var):
        bf, bg = env_f.get(s.name), env_g.get(t.name)
        if bf is None and bg is None:
            return s.name == t.name
        return bf == bg
    if isinstance(s, Fun) and isinstance(t, Fun):
        return (
            s.name == t.name
            and len(s.args) == len(t.args)
            and all(_alpha_term(a, b, env_f, env_g) for a, b in zip(s.args, t.args))
        )
    return False


def _alpha(f: Formula, g: Formula, env_f: dict, env_g: dict) -> bool:
    if type(f) is not type(g):
        return False
    if isinstance(f, Atom):
        return (
            f.pred == g.pred
            and len(f.args) == len(g.args)
            and all(_alpha_term(a, b, env_f, env_g) for a, b in zip(f.args, g.args))
        )
    if isinstance(f, (Not, NotC)):
        return _alpha(f.body, g.body, env_f, env_g)
    if isinstance(f, BINARY_NODES):
        return _alpha(f.left, g.left, env_f, env_g) and _alpha(
            f.right, g.right, env_f, env_g
        )
    if isinstance(f, QUANT_NODES):
        depth = len(env_f)
        env_f2 = dict(env_f)
        env_g2 = dict(env_g)
        env_f2[f.var] = depth
        env_g2[g.var] = depth
        return _alpha(f.body, g.body, env_f2, env_g2)
    return True  # zero-ary


# ---------------------------------------------------------------------------
# Sequents


@dataclass(frozen=True, slots=True)
class Sequent:
    """Antecedent and succedent formula multisets (order preserved, duplicates
    significant; contraction and weakening are explicit rules)."""

    ante: tuple[Formula, ...]
    succ: tuple[Formula, ...]

    def free_variables(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for f in self.ante + self.succ:
            out |= free_variables(f)
        return out


def sequent_subterms(s: Sequent) -> list[Term]:
    """All subterms of atom arguments in s, deduplicated, in occurrence order."""
    seen: dict[Term, None] = {}

    def walk(f: Formula) -> None:
        if isinstance(f, Atom):
            for a in f.args:
                for t in subterms(a):
                    seen.setdefault(t, None)
        elif isinstance(f, (Not, NotC)):
            walk(f.body)
        elif isinstance(f, BINARY_NODES):
            walk(f.left)
            walk(f.right)
        elif isinstance(f, QUANT_NODES):
            walk(f.body)

    for f in s.ante + s.succ:
        walk(f)
    return list(seen)


# ---------------------------------------------------------------------------
# Enumeration of propositional core formulas


CONNECTIVES = ("top", "bot", "not", "and", "or", "imp")


def enumerate_formulas(
    atoms: list[str],
    max_size: int,
    connectives: Iterable[str] | None = None,
) -> Iterator[Formula]:
    """Every propositional core formula over the given atoms with node count
    <= max_size, each exactly once, smaller sizes first.

    The order is deterministic and the size-k output is a prefix of the
    size-(k+1) output.
    """
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    enabled = set(CONNECTIVES if connectives is None else connectives)
    unknown = enabled - set(CONNECTIVES)
    if unknown:
        raise ValueError("unknown connectives: %s" % sorted(unknown))

    by_size: list[list[Formula]] = [[]]  # by_size[k] = formulas of size k
    leaves: list[Formula] = [Atom(a) for a in atoms]
    if "top" in enabled:
        leaves.append(TOP)
    if "bot" in enabled:
        leaves.append(BOT)
    by_size.append(leaves)
    yield from leaves

    binary_ops = [op for name, op in (("and", And), ("or", Or), ("imp", Imp)) if name in enabled]
    for s in range(2, max_size + 1):
        level: list[Formula] = []
        if "not" in enabled:
            level.extend(Not(g) for g in by_size[s - 1])
        for op in binary_ops:
            for i in range(1, s - 1):
                level.extend(
                    op(g, h)
                    for g, h in itertools.product(by_size[i], by_size[s - 1 - i])
                )
        by_size.append(level)
        yield from level


def count_formulas(
    n_atoms: int, max_size: int, connectives: Iterable[str] | None = None
) -> int:
    """Number of formulas enumerate_formulas would emit, by recurrence
    (no trees built); used as an independent check on the enumerator."""
    enabled = set(CONNECTIVES if connectives is None else connectives)
    n1 = n_atoms + ("top" in enabled) + ("bot" in enabled)
    n_binary = sum(1 for c in ("and", "or", "imp") if c in enabled)
    counts = [0, n1]
    for s in range(2, max_size + 1):
        c = counts[s - 1] if "not" in enabled else 0
        c += n_binary * sum(counts[i] * counts[s - 1 - i] for i in range(1, s - 1))
        counts.append(c)
    return sum(counts)

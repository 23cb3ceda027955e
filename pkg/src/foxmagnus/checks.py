"""Runnable invariant batteries behind ``foxmagnus check``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .braids import (
    braid_relations,
    braid_to_endo,
    kernel_witness,
    pure_braid_relations,
    pure_generator_as_braid,
    pure_generator_as_eps,
)
from .fox import fundamental_formula_holds
from .magnus import gassner, magnus_matrix, rho, rho_hat_G
from .rings import GroupRingElem, Phi
from .words import FreeWord, GeneratorWord, Gen, a_pure, group_commutator

SUITES = ("braid-relations", "pure-relations", "theorem1", "fundamental", "kernel")


@dataclass
class Outcome:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    suite: str
    outcomes: list[Outcome] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = ""):
        self.outcomes.append(Outcome(name, bool(passed), detail if not passed else ""))

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    @property
    def failures(self) -> list[Outcome]:
        return [o for o in self.outcomes if not o.passed]

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite}: {len(self.outcomes) - len(self.failures)}/{len(self.outcomes)} checks"


def check_braid_relations(n: int) -> Report:
    rep = Report("braid-relations")
    for name, lhs, rhs in braid_relations(n):
        el, er = lhs.endomorphism(), rhs.endomorphism()
        rep.add(f"{name} [endomorphism]", el == er, f"{el} != {er}")
        ml, mr = rho(lhs, Phi.BURAU), rho(rhs, Phi.BURAU)
        rep.add(f"{name} [burau]", ml == mr, f"\n{ml}\n!=\n{mr}")
    return rep


def check_pure_relations(n: int) -> Report:
    rep = Report("pure-relations")
    for name, lhs, rhs in pure_braid_relations(n):
        el, er = lhs.endomorphism(), rhs.endomorphism()
        rep.add(f"{name} [endomorphism]", el == er, f"{el} != {er}")
        for phi in (Phi.GASSNER, Phi.BURAU):
            ml, mr = rho(lhs, phi), rho(rhs, phi)
            rep.add(f"{name} [{phi.value}]", ml == mr, f"\n{ml}\n!=\n{mr}")
    return rep


def check_gassner_recovery(n: int) -> Report:
    rep = Report("theorem1")
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            g = gassner(i, j, n)
            endo = a_pure(i, j, n)
            rep.add(f"a[{i},{j}] braid word", braid_to_endo(pure_generator_as_braid(i, j, n)) == endo)
            rep.add(f"a[{i},{j}] magnus", magnus_matrix(endo, Phi.GASSNER) == g)
            for variant in ("lower", "upper"):
                w = pure_generator_as_eps(i, j, n, variant)
                m = rho_hat_G(w)
                rep.add(f"a[{i},{j}] {variant} e-word", m == g and w.endomorphism() == endo, f"{w}:\n{m}")
    return rep


def random_group_ring_element(rng: random.Random, n: int, max_len: int = 12, max_terms: int = 5) -> GroupRingElem:
    terms: dict[FreeWord, int] = {}
    for _ in range(rng.randint(1, max_terms)):
        length = rng.randint(0, max_len)
        w = FreeWord(n, [rng.choice([1, -1]) * rng.randint(1, n) for _ in range(length)])
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        terms[w] = terms.get(w, 0) + c
    return GroupRingElem(n, terms)


def check_fundamental(n: int, seed: int = 0, samples: int = 200) -> Report:
    rep = Report("fundamental")
    rng = random.Random(seed)
    for k in range(samples):
        v = random_group_ring_element(rng, rng.randint(1, n))
        res = fundamental_formula_holds(v)
        rep.add(f"sample {k}", res.holds, f"v = {v}: {res.lhs} != {res.rhs}")
    return rep


def check_kernel(n: int, seed: int = 0, samples: int = 20) -> Report:
    rep = Report("kernel")
    rng = random.Random(seed)
    if n == 2:
        kinds = [("D1", None)]
        c = group_commutator(GeneratorWord(2, (Gen("e", (1, 2)),)), GeneratorWord(2, (Gen("e", (2, 1)),)))
        rep.add("[e12,e21] not in kernel", not rho_hat_G(c).is_identity())
    else:
        kinds = [("L", i) for i in range(2, n)]
    for kind, i in kinds:
        for k in range(samples):
            w = kernel_witness(kind, i=i, n=n, seed=rng)
            label = kind if i is None else f"L_{i}"
            rep.add(f"{label} witness {k}", rho_hat_G(w).is_identity(), f"{w} maps to\n{rho_hat_G(w)}")
    return rep


def run_suite(suite: str, n: int, seed: int = 0, samples: int | None = None) -> Report:
    if suite == "braid-relations":
        return check_braid_relations(n)
    if suite == "pure-relations":
        return check_pure_relations(n)
    if suite == "theorem1":
        return check_gassner_recovery(n)
    if suite == "fundamental":
        return check_fundamental(n, seed, 200 if samples is None else samples)
    if suite == "kernel":
        return check_kernel(n, seed, 20 if samples is None else samples)
    raise ValueError(f"unknown suite {suite!r}")

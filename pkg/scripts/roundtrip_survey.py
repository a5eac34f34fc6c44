"""Survey of classify/equivalence round trips over random twisted loop algebras.

For each finite abelian group G up to a size bound, each subgroup H, and a
few random sign/2-power cocycles tau on G, the 2x2 matrix algebra graded by
G/H (diagonal in degree 0, antidiagonal in a random degree) is looped,
classified, and compared with the constructed triple.  One JSON line per
instance goes to stdout; a summary goes to stderr.
"""
import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from gradloop.abgroup import FiniteAbelianGroup
from gradloop.cohom import class_invariants, standard_cocycle
from gradloop.exactnum.scalars import format_scalar
from gradloop.exactnum.values import ValueGroup
from gradloop.galg import matrix_algebra
from gradloop.loop import Equivalent, canonical_quotient, classify, equivalence_check, make_triple, twisted_loop

V2 = ValueGroup(2, (Fraction(2),))
PARAMS = [Fraction(1), Fraction(-1), Fraction(2), Fraction(-2)]
GROUPS = [(2,), (4,), (2, 2), (8,), (2, 4), (2, 2, 2), (3,), (6,), (3, 3)]


@dataclass
class SurveyConfig:
    max_order: int = 8
    cocycles_per_subgroup: int = 2
    max_dim: int = 16
    seed: int = 0


def instances(cfg):
    rng = random.Random(cfg.seed)
    for factors in GROUPS:
        G = FiniteAbelianGroup(factors)
        if G.order > cfg.max_order:
            continue
        for H in G.all_subgroups():
            Hc, Q, pi = canonical_quotient(H)
            if 4 * H.order > cfg.max_dim:
                continue
            k = len([n for n in G.invariant_factors if n > 1])
            for _ in range(cfg.cocycles_per_subgroup):
                tau = standard_cocycle(G, [rng.choice(PARAMS) for _ in range(k)], V2)
                g = rng.choice(Q.elements)
                A = matrix_algebra(Q, [Q.zero, g])
                yield G, H, A, tau


def run(cfg):
    total = ok = 0
    for G, H, A, tau in instances(cfg):
        Hc, Q, pi = canonical_quotient(H)
        start = time.perf_counter()
        B = twisted_loop(A, pi, tau)
        t = classify(B, seed=cfg.seed)
        res = equivalence_check(t, make_triple(H, tau, A))
        elapsed = time.perf_counter() - start
        passed = isinstance(res, Equivalent) and res.loop_iso.verify()
        total += 1
        ok += passed
        row = {"G": list(G.invariant_factors), "H": [list(h) for h in H.generators],
               "tau": [format_scalar(tau.coeffs.embed(x)) for x in class_invariants(tau).invariants],
               "dim_B": B.dim, "found_H_order": t.H.order, "verdict": res.kind,
               "seconds": round(elapsed, 3)}
        print(json.dumps(row), flush=True)
    print(f"{ok}/{total} round trips equivalent", file=sys.stderr)
    return ok == total


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    d = SurveyConfig()
    p.add_argument("--max-order", type=int, default=d.max_order)
    p.add_argument("--cocycles-per-subgroup", type=int, default=d.cocycles_per_subgroup)
    p.add_argument("--max-dim", type=int, default=d.max_dim)
    p.add_argument("--seed", type=int, default=d.seed)
    a = p.parse_args(argv)
    cfg = SurveyConfig(a.max_order, a.cocycles_per_subgroup, a.max_dim, a.seed)
    return 0 if run(cfg) else 1


if __name__ == "__main__":
    sys.exit(main())

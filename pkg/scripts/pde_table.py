"""Emit the invariant operators of every admissible family and compare with the hand-written ones.

    python scripts/pde_table.py --ells 4 5 --format latex
"""
import argparse

from cgarep.diffop import INVARIANCE_NOTE, verify_prop6_prop7
from cgarep.liealg import AlgebraConfig


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ells", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--n-max", type=int, default=2)
    args = ap.parse_args()

    for ell in args.ells:
        for row in verify_prop6_prop7(AlgebraConfig(ell), args.n_max):
            status = "match" if row["ok"] else "MISMATCH"
            print(f"ell={ell} {row['family']:9s} n={row['n']} {status:8s} ratio={row['ratio']}: {row['emitted']}")
    print(f"# {INVARIANCE_NOTE}")


if __name__ == "__main__":
    main()

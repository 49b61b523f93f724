"""Print quotient towers for a range of ell, at generic p and at p = 0.

    python scripts/tower_trace.py --ells 2 3 4 --deltas -1/2 -1 0 1/3
"""
import argparse

from cgarep.exact import ZERO, ParamPoly, Q
from cgarep.liealg import AlgebraConfig
from cgarep.tower import build_tower
from cgarep.verma import Weight


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ells", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--deltas", nargs="+", default=["-1/2", "-1", "-3/2", "0", "1/3"])
    ap.add_argument("--max-level", type=int, default=8)
    args = ap.parse_args()

    for ell in args.ells:
        cfg = AlgebraConfig(ell)
        print(f"== ell={ell}, generic p")
        print(build_tower(cfg, max_level=min(args.max_level, ell + 3)).to_text())
        for d in args.deltas:
            print(f"== ell={ell}, p=0, delta={d}")
            print(build_tower(cfg, Weight(ParamPoly.const(Q(d)), ZERO), "p_zero", args.max_level).to_text())
        print()


if __name__ == "__main__":
    main()

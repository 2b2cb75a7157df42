import argparse
import random

from gridfree.codes import gt_decode, gt_encode, superimposed_report
from gridfree.constructions import transversal


def main():
    ap = argparse.ArgumentParser(
        description="group testing with a two-slope line family"
    )
    ap.add_argument("--defectives", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    # 106 items, 212 pools, every item in 4 pools
    h = transversal(53, 4, (1, 3))
    rep = superimposed_report(h)
    print(f"items={h.m} pools={h.n} tests-per-item={h.r}")
    print(f"cover-free: {rep.cover_free}, union-free: {rep.union_free}")
    print(f"optimal code: {rep.optimal_code}, optimal design: {rep.optimal_design}")

    rng = random.Random(args.seed)
    defective = sorted(rng.sample(range(h.m), args.defectives))
    print(f"\nhidden defective set: {defective}")

    outcome = gt_encode(h, defective)
    positives = bin(outcome).count("1")
    print(f"ran {h.n} pooled tests, {positives} came back positive")

    decoded = gt_decode(outcome, h)
    print(f"decoded: {list(decoded)}")
    print("exact recovery" if list(decoded) == defective else "MISMATCH")


if __name__ == "__main__":
    main()

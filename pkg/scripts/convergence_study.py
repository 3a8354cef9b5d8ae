#!/usr/bin/env python3
"""
Convergence study of the finite-section norm estimate
Tabulates ||H f_gamma|| / ||f_gamma|| against pi / sin((2+alpha) pi / p)
for a grid of gamma and truncation sizes N.
"""

import sys
from pathlib import Path
import argparse

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pandas as pd

from hilbertnorm.analysis.kernel import Params
from hilbertnorm.config import setup_logging
from hilbertnorm.errors import HilbertNormError
from hilbertnorm.estimate.normest import convergence_study


def _floats(text: str):
    return [float(x) for x in text.split(',') if x.strip()]


def main():
    parser = argparse.ArgumentParser(
        description="Finite-section norm estimates against the conjectured norm"
    )
    parser.add_argument("--alpha", type=float, default=0.0, help="Weight parameter alpha")
    parser.add_argument("--p", type=float, default=4.0, help="Exponent p")
    parser.add_argument(
        "--gammas",
        type=str,
        default="0.3,0.4,0.45,0.48",
        help="Comma-separated test exponents gamma < (2+alpha)/p"
    )
    parser.add_argument(
        "--sizes",
        type=str,
        default="250,500,1000,2000",
        help="Comma-separated truncation sizes N"
    )
    parser.add_argument("--out", type=str, default=None, help="Optional CSV output path")
    parser.add_argument("--log-level", type=str, default=None)

    args = parser.parse_args()
    setup_logging(args.log_level)

    try:
        params = Params(alpha=args.alpha, p=args.p)
        rows = convergence_study(params, _floats(args.gammas), [int(n) for n in _floats(args.sizes)])
    except HilbertNormError as exc:
        print(f"Error: {exc}")
        sys.exit(1)

    frame = pd.DataFrame(rows)
    print("=" * 60)
    print(f"Norm estimate convergence: alpha = {args.alpha:g}, p = {args.p:g}")
    print("=" * 60)
    print(frame.to_string(index=False, float_format=lambda v: f"{v:.8f}"))

    worst = frame['ratio'].max() / frame['conjectured'].iloc[0]
    print()
    print(f"Largest ratio / conjectured norm: {worst:.6f}")
    if args.out:
        frame.to_csv(args.out, index=False, float_format="%.17g")
        print(f"Saved to: {args.out}")


if __name__ == "__main__":
    main()

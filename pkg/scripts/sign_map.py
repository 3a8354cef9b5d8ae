#!/usr/bin/env python3
"""
Sign map of condition (c)
Evaluates form (c) with error bars along a p-grid at fixed alpha and
reports where it changes sign (alpha = 1 shows the unresolved strip).
"""

import sys
from pathlib import Path
import argparse

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import numpy as np
import pandas as pd

from hilbertnorm.analysis.conditions import classify
from hilbertnorm.analysis.kernel import Params
from hilbertnorm.config import setup_logging
from hilbertnorm.errors import HilbertNormError
from hilbertnorm.special.quadrature import default_quad_config


def main():
    parser = argparse.ArgumentParser(
        description="Sign of condition (c) along a p-grid"
    )
    parser.add_argument("--alpha", type=float, default=1.0)
    parser.add_argument("--p-min", type=float, default=4.1, dest="p_min")
    parser.add_argument("--p-max", type=float, default=5.7, dest="p_max")
    parser.add_argument("--steps", type=int, default=17)
    parser.add_argument("--out", type=str, default=None, help="Optional CSV output path")
    parser.add_argument("--log-level", type=str, default=None)

    args = parser.parse_args()
    setup_logging(args.log_level)
    cfg = default_quad_config()

    rows = []
    for p in np.linspace(args.p_min, args.p_max, args.steps):
        try:
            params = Params(alpha=args.alpha, p=float(p))
            status = classify(params, cfg)
        except HilbertNormError as exc:
            print(f"p = {p:.4f}: {exc}")
            continue
        values = status.values
        rows.append({
            'p': float(p),
            'regime': status.regime.tag.value,
            'condition_c': None if values is None else values.c_value,
            'condition_c_err': None if values is None else values.c_error,
            'status': status.status.value,
        })

    frame = pd.DataFrame(rows)
    print("=" * 60)
    print(f"Condition (c) sign map at alpha = {args.alpha:g}")
    print("=" * 60)
    print(frame.to_string(index=False))

    signs = np.sign(frame['condition_c'].dropna().to_numpy())
    flips = int(np.count_nonzero(np.diff(signs)))
    print()
    print(f"Sign changes along the grid: {flips}")
    if args.out:
        frame.to_csv(args.out, index=False, float_format="%.17g")
        print(f"Saved to: {args.out}")


if __name__ == "__main__":
    main()

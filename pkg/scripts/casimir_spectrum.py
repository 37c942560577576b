"""Spectrum of the Casimir table operator on S²(so(n+1)), with the
highest-weight constituents behind each eigenvalue.

    python3 scripts/casimir_spectrum.py --n 3 8
"""
import argparse
import time

from nlie import casimir, uea


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs=2, default=(3, 6), metavar=("LO", "HI"))
    args = ap.parse_args()
    for n in range(args.n[0], args.n[1] + 1):
        t0 = time.perf_counter()
        spect = casimir.spectrum(n)
        dec = casimir.s2_decomposition(n)
        print(f"n={n}  dim S²={uea.dim_s2(n)}  ({time.perf_counter() - t0:.1f}s)")
        for th, mult in sorted(spect.items()):
            parts = [f"{d['multiplicity']}×V({','.join(str(c) for c in d['weight'])})[{d['dimension']}]"
                     for d in dec if th in d["eigenvalues"]]
            print(f"  θ={str(th):>5}  mult={mult:<4} " + " + ".join(parts))


if __name__ == "__main__":
    main()

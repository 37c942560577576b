"""Run the verification battery for a range of n and print a table.

    python3 scripts/run_battery.py --lo 3 --hi 6 [--out reports.jsonl]
"""
import argparse
import json

from nlie import report


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--lo", type=int, default=3)
    ap.add_argument("--hi", type=int, default=6)
    ap.add_argument("--out", default=None, help="also write the JSON lines here")
    args = ap.parse_args()
    sink = open(args.out, "w") if args.out else None
    total = 0.0
    failed = 0
    for n in range(args.lo, args.hi + 1):
        for job in report.battery(n):
            r = job()
            total += r.wall_time or 0.0
            failed += r.status == "fail"
            print(f"{r.check:<15} n={n}  {r.status:<8} {r.wall_time or 0:8.2f}s")
            if sink:
                sink.write(r.to_json() + "\n")
    if sink:
        sink.close()
    print(f"total {total:.1f}s, {failed} failed")
    print(json.dumps({"failed": failed, "seconds": round(total, 1)}))


if __name__ == "__main__":
    main()

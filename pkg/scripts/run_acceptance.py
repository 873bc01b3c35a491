"""Run every acceptance criterion and print one line each; exit 1 on any failure."""
import json
import sys

from drinfeld_obstruction.acceptance import run_all


def main(argv):
    results = run_all()
    for r in results:
        print(r.line())
    if "--json" in argv:
        print(json.dumps([r.to_json() for r in results], indent=2, sort_keys=True))
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))

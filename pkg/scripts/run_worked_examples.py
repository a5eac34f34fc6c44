"""Run the worked examples and print one line per example (exit 1 on any failure)."""
import json
import sys

from gradloop.demo import run_examples


def main():
    ok = True
    for name, passed, details in run_examples():
        ok = ok and passed
        print(f"{'ok  ' if passed else 'FAIL'} {name}")
        print("     " + json.dumps(details, sort_keys=True))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

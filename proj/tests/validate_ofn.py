"""Parses generated functional-syntax documents with pyhornedowl and checks
that every SubClassOf axiom survives."""

import json
import pathlib
import subprocess
import sys
import tempfile

import pyhornedowl


def main() -> int:
    dump_tool, source_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    corpora = [str(source_dir / "corpus" / name) for name in ("worked-examples.txt", "smoke.txt")]
    with tempfile.TemporaryDirectory() as tmp:
        subprocess.run([dump_tool, tmp, *corpora], check=True)
        expected = json.loads(pathlib.Path(tmp, "expected.json").read_text())
        failures = 0
        for name, count in expected.items():
            text = pathlib.Path(tmp, name).read_text(encoding="utf-8")
            try:
                onto = pyhornedowl.open_ontology_from_string(text, "ofn")
            except ValueError as err:
                print(f"FAIL {name}: {err}")
                failures += 1
                continue
            subclass = [a for a in onto.get_axioms() if str(a).startswith("SubClassOf(")]
            status = "ok" if len(subclass) == count else "FAIL"
            print(f"{status} {name}: {len(subclass)} SubClassOf axioms parsed, {count} written")
            failures += status != "ok"
        return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""End-to-end checks of the birkhoff CLI: exit codes, examples, schemas.

usage: test_cli.py <path-to-birkhoff> <schema-dir>
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BIN = None
SCHEMAS = None


def run(*args, expect=0):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=60)
    if expect is not None and p.returncode != expect:
        raise AssertionError(f"{args}: exit {p.returncode}, expected {expect}\nstdout: {p.stdout}\nstderr: {p.stderr}")
    return p


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


def validated(name, *args, expect=0):
    out = json.loads(run(*args, expect=expect).stdout)
    jsonschema.Draft202012Validator(schema(name)).validate(out)
    return out


class Examples(unittest.TestCase):
    def test_pinf_text(self):
        self.assertEqual(run("poincare", "pinf", "--n", "2", "--m", "5", "--format", "text").stdout.strip(),
                         "1 + t^2 + t^4 + t^6")

    def test_flow_validate(self):
        out = validated("flow-validate", "flow", "validate", "--type", "A", "--rank", "1", "--k", "3", "--gamma", "-1")
        self.assertTrue(out["condition_a"])
        self.assertTrue(out["condition_b"])

    def test_bruhat_leq_strict(self):
        run("bruhat", "leq", "--type", "A", "--rank", "1", "--parabolic", "none", "--mu", "0", "--lambda", "1,0",
            "--strict-exit")
        run("bruhat", "leq", "--mu", "0,1", "--lambda", "1,0", "--strict-exit", expect=1)


class ExitCodes(unittest.TestCase):
    def error(self, p, kind):
        err = json.loads(p.stderr.strip().splitlines()[-1])
        jsonschema.Draft202012Validator(schema("error")).validate(err)
        self.assertEqual(err["error"]["kind"], kind)

    def test_domain_rejections(self):
        self.error(run("roots", "show", "--type", "D", "--rank", "3", expect=1), "domain")
        self.error(run("bruhat", "leq", "--mu", "0", "--lambda", "2", expect=1), "domain")
        self.error(run("weyl", "word", "--word", "0", "--parabolic", "0,1", expect=1), "domain")
        self.error(run("richardson", "codim", "--lambda", "0,1", "--mu", "0", expect=1), "domain")

    def test_malformed(self):
        run("bruhat", expect=2)
        run("bruhat", "leq", "--mu", "0", expect=2)
        run("roots", "show", "--format", "dot", expect=2)
        run("flow", "validate", "--k", "three", expect=2)
        self.error(run("bruhat", "leq", "--mu", "x", "--lambda", "0", expect=2), "usage")
        run("frobnicate", expect=2)

    def test_strict_exit_booleans(self):
        run("flow", "validate", "--k", "1", "--gamma", "-1", "--strict-exit", expect=1)
        # flow validate reports through its exit code even without the flag.
        out = json.loads(run("flow", "validate", "--k", "1", "--gamma", "-1", expect=1).stdout)
        self.assertFalse(out["condition_b"])
        run("interval", "connected", "--lambda", "0", "--mu", "0,1,0", "--max-length", "4", "--strict-exit")
        run("interval", "connected", "--lambda", "0", "--mu", "1", "--max-length", "4", "--strict-exit", expect=1)


class Schemas(unittest.TestCase):
    def test_every_json_output(self):
        validated("roots-show", "roots", "show", "--type", "C", "--rank", "3")
        validated("weyl-word", "weyl", "word", "--type", "B", "--rank", "2", "--word", "0,1,2", "--parabolic", "1")
        validated("bruhat-ideal", "bruhat", "ideal", "--rank", "2", "--generators", "0,1;2,0")
        validated("bruhat-ideal", "bruhat", "ideal", "--rank", "2", "--generators", "0", "--direction", "upper",
                  "--max-length", "3")
        validated("bruhat-hasse", "bruhat", "hasse", "--rank", "2", "--max-length", "3")
        validated("flow-weights", "flow", "weights", "--type", "C", "--rank", "2", "--word", "0,1,2")
        validated("flow-validate", "flow", "validate", "--type", "D", "--rank", "4", "--canonical")
        validated("gkm-graph", "gkm", "build", "--rank", "2", "--parabolic", "1,2", "--max-length", "3",
                  "--level-bound", "3")
        w = validated("gkm-witnesses", "gkm", "witnesses", "--sigma", "e", "--generators", "0", "--max-length", "5",
                      "--level-bound", "3")
        self.assertEqual(w["found"], 3)
        for sub, extra in [("flag", ["--cap", "6"]), ("lower", ["--generators", "0,1"]),
                           ("pair", ["--generators", "0", "--max-length", "3"]),
                           ("betti", ["--generators", "0", "--max-length", "3", "--cap", "6"]),
                           ("pinf", ["--n", "1", "--m", "4"]), ("pinf", ["--n", "4", "--m", "1"])]:
            validated("poincare", "poincare", sub, *extra)
        validated("richardson-codim", "richardson", "codim", "--parabolic", "1", "--lambda", "0", "--mu", "0,1,0")
        validated("interval-connected", "interval", "connected", "--lambda", "0", "--mu", "0,1,0", "--max-length", "4")

    def test_enumerate_lines(self):
        lines = run("weyl", "enumerate", "--rank", "2", "--max-length", "3").stdout.strip().splitlines()
        v = jsonschema.Draft202012Validator(schema("weyl-enumerate"))
        for line in lines:
            v.validate(json.loads(line))
        self.assertEqual(len(lines), 1 + 3 + 6 + 9)

    def test_dot(self):
        dot = run("bruhat", "hasse", "--rank", "1", "--parabolic", "1", "--max-length", "3", "--format", "dot").stdout
        self.assertTrue(dot.startswith("digraph"))
        self.assertIn('label="0,1,0", rank=3', dot)

    def test_deterministic(self):
        a = run("gkm", "build", "--rank", "2", "--max-length", "3", "--level-bound", "2").stdout
        b = run("gkm", "build", "--rank", "2", "--max-length", "3", "--level-bound", "2").stdout
        self.assertEqual(a, b)


class RoundTrip(unittest.TestCase):
    def test_build_then_check(self):
        with tempfile.TemporaryDirectory() as d:
            for rank, parabolic in [(1, "none"), (1, "1"), (2, "none"), (2, "1,2")]:
                graph = os.path.join(d, f"g{rank}{parabolic}.json")
                with open(graph, "w") as f:
                    f.write(run("gkm", "build", "--rank", str(rank), "--parabolic", parabolic, "--max-length", "4",
                                "--level-bound", "4").stdout)
                for c in ["0", "1", "-7"]:
                    out = validated("gkm-check", "gkm", "check", "--graph", graph, "--constant", c)
                    self.assertTrue(out["member"])
                out = validated("gkm-check", "gkm", "check", "--graph", graph, "--character", "0" + ",1" * rank,
                                "--power", "2", "--strict-exit")
                self.assertTrue(out["member"])

    def test_function_file(self):
        with tempfile.TemporaryDirectory() as d:
            graph = os.path.join(d, "g.json")
            with open(graph, "w") as f:
                f.write(run("gkm", "build", "--rank", "1", "--max-length", "2", "--level-bound", "2").stdout)
            fn = {"0": [], "1": [{"exps": [0, 1], "num": 1, "den": 1}], "2": []}
            jsonschema.Draft202012Validator(schema("gkm-function")).validate(fn)
            path = os.path.join(d, "f.json")
            with open(path, "w") as f:
                json.dump(fn, f)
            out = validated("gkm-check", "gkm", "check", "--graph", graph, "--function", path, "--strict-exit",
                            expect=1)
            self.assertFalse(out["member"])
            self.assertTrue(out["violations"])


class Config(unittest.TestCase):
    def test_explicit_flags_win(self):
        with tempfile.TemporaryDirectory() as d:
            cfg = os.path.join(d, "c.json")
            with open(cfg, "w") as f:
                json.dump({"type": "A", "rank": 2, "parabolic": "1,2", "format": "text"}, f)
            self.assertEqual(run("poincare", "flag", "--config", cfg, "--cap", "4").stdout.strip(),
                             "1 + t^2 + 2t^4 + O(t^6)")
            self.assertEqual(run("poincare", "flag", "--config", cfg, "--cap", "4", "--parabolic", "none").stdout.strip(),
                             "1 + 3t^2 + 6t^4 + O(t^6)")
            run("poincare", "flag", "--config", os.path.join(d, "missing.json"), "--cap", "2", expect=2)


if __name__ == "__main__":
    BIN, SCHEMAS = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0], "-v"])

"""End-to-end checks of the cgdl binary: exit codes, JSON schema, determinism.

Usage: test_cli.py CGDL_BINARY SOURCE_DIR
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

CGDL = ""
SOURCE = Path(".")


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("CGDL_SEED", None)
    if env:
        full_env.update(env)
    return subprocess.run([CGDL, *args], capture_output=True, text=True, env=full_env, timeout=300)


def model(name):
    return str(SOURCE / "models" / name)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        schema = json.loads((SOURCE / "schemas" / "report.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        cls.validator = jsonschema.Draft202012Validator(schema)
        cls.tmp = tempfile.TemporaryDirectory()
        swap = {
            "lattice": {"kind": "godel-chain", "levels": 3},
            "states": ["x", "y"],
            "valuation": {"p": {"x": "1"}},
            "programs": {"a": [{"from": "x", "to": ["y"]}, {"from": "y", "to": ["x"]}]},
        }
        cls.swap = Path(cls.tmp.name) / "swap.json"
        cls.swap.write_text(json.dumps(swap))
        cls.broken = Path(cls.tmp.name) / "broken.json"
        cls.broken.write_text('{"states": ["x",}')

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def json_of(self, *args, code=0, env=None):
        r = run(*args, "--format", "json", env=env)
        self.assertEqual(r.returncode, code, r.stderr)
        doc = json.loads(r.stdout)
        self.validator.validate(doc)
        return doc

    def test_eval_true_is_top_everywhere(self):
        doc = self.json_of("eval", model("concurrent.json"), "true")
        [result] = doc["results"]
        self.assertTrue(result["valid"])
        self.assertEqual({v["value"] for v in result["values"]}, {"1"})

    def test_eval_queries_and_trace(self):
        doc = self.json_of("eval", model("concurrent.json"), "--trace")
        self.assertEqual(len(doc["results"]), 6)
        self.assertTrue(all("trace" in r for r in doc["results"]))
        first = doc["results"][0]
        self.assertEqual(first["formula"], "<a>p")
        self.assertEqual(first["values"][0], {"state": "w0", "value": "1/2"})

    def test_text_and_json_agree(self):
        doc = self.json_of("eval", model("boolean.json"))
        text = run("eval", model("boolean.json")).stdout
        for r in doc["results"]:
            self.assertIn(r["formula"], text)
            for v in r["values"]:
                self.assertIn(f'{v["state"]}  {v["value"]}', text)

    def test_gdl(self):
        doc = self.json_of("gdl", model("boolean.json"), "<a ; a>q", "[a*]p")
        self.assertEqual(doc["results"][0]["values"][0]["value"], "1")

    def test_every_command_validates(self):
        self.json_of("audit", "--lattice", "godel:5")
        self.json_of("audit", "--lattice", "lukasiewicz:101", "--sample", "8", "--seed", "3")
        self.json_of("compare", "--states", "3", "--samples", "200", "--seed", "1")
        self.json_of("axioms", "--lattice", "boolean", "--max-states", "1", "--exhaustive",
                     "--axiom", "2.4", "--axiom", "2.6", "--axiom", "L3.1")
        doc = self.json_of("search", "--lattice", "godel:3", "--max-states", "2", "--samples", "100",
                           "--seed", "7", "--axiom", "2.5", code=1)
        self.assertEqual(doc["coverage"], "sampled")
        self.assertGreater(doc["counterexamples"], 0)

    def test_exit_codes(self):
        self.assertEqual(run("eval", model("concurrent.json"), "<a>p").returncode, 0)
        self.assertEqual(run("search", "--lattice", "godel:3", "--samples", "100", "--seed", "7",
                             "--axiom", "2.5").returncode, 1)
        self.assertEqual(run("eval", model("concurrent.json"), "<a>(p &").returncode, 2)
        self.assertEqual(run("eval", str(self.broken)).returncode, 2)
        self.assertEqual(run("eval", model("concurrent.json"), "--seq-mode", "odd").returncode, 2)
        self.assertEqual(run("audit", "--lattice", "product:3").returncode, 2)
        self.assertEqual(run("eval", "/nonexistent/model.json").returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("eval", model("concurrent.json"), "<c>p").returncode, 3)
        self.assertEqual(run("eval", model("concurrent.json"), "r").returncode, 3)
        self.assertEqual(run("gdl", model("concurrent.json"), "<a & b>p").returncode, 3)
        cut = run("eval", str(self.swap), "<a*>p", "--star-iterations", "1")
        self.assertEqual(cut.returncode, 4)
        self.assertIn("converge", cut.stderr)
        self.assertEqual(run("eval", str(self.swap), "<a*>p").returncode, 0)
        self.assertEqual(run("--help").returncode, 0)

    def test_config_file(self):
        cfg = Path(self.tmp.name) / "cfg.json"
        cfg.write_text(json.dumps({"lattice": "godel:3", "max_states": 1, "axioms": ["2.4"],
                                   "exhaustive": True}))
        doc = self.json_of("axioms", "--config", str(cfg))
        self.assertEqual(doc["coverage"], "exhaustive")
        self.assertEqual(doc["config"]["max_states"], 1)
        doc = self.json_of("axioms", "--config", str(cfg), "--max-states", "2", "--max-pairs", "1",
                           "--programs", "1")
        self.assertEqual(doc["config"]["max_states"], 2)
        cfg.write_text(json.dumps({"lattice": "godel:3", "colour": "blue"}))
        self.assertEqual(run("axioms", "--config", str(cfg)).returncode, 2)

    def test_determinism(self):
        args = ["search", "--lattice", "godel:3", "--samples", "300", "--axiom", "2.5",
                "--axiom", "2.1/all", "--format", "json"]
        a = run(*args, "--seed", "11", "--jobs", "1")
        b = run(*args, "--seed", "11", "--jobs", "4")
        c = run(*args, env={"CGDL_SEED": "11"})
        self.assertEqual(a.stdout, b.stdout)
        self.assertEqual(a.stdout, c.stdout)
        d = run(*args, "--seed", "12")
        self.assertNotEqual(a.stdout, d.stdout)
        x = run("compare", "--states", "4", "--samples", "300", "--seed", "5", "--jobs", "1")
        y = run("compare", "--states", "4", "--samples", "300", "--seed", "5", "--jobs", "3")
        self.assertEqual(x.stdout, y.stdout)


if __name__ == "__main__":
    CGDL = sys.argv[1]
    SOURCE = Path(sys.argv[2])
    unittest.main(argv=[sys.argv[0], "-v"])

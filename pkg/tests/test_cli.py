"""Unit tests for the command-line interface."""

import io
import json
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest.mock import patch

import yaml

from cli.main import EXIT_DISAGREEMENT, EXIT_INPUT, EXIT_OK, load_algebra, load_module, main
from utils.utils import DisagreementDetected, SchemaError, UnknownName


def run_main(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestLoading(unittest.TestCase):
    """Test algebra and module specifications."""

    def test_corpus_source(self):
        self.assertEqual(load_algebra("corpus:nak-2-3", 101).dim, 5)

    def test_kupisch_source(self):
        self.assertEqual(load_algebra("kupisch:2,1", 101).dim, 3)
        self.assertEqual(load_algebra("kupisch:2,3:cyclic", 0).dim, 5)

    def test_dsl_file_named_after_stem(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp, "dual_numbers.quiver")
            path.write_text("vertex v\narrow x: v -> v\nrelation x*x\n", encoding='utf-8')
            a = load_algebra(str(path), 101)
        self.assertEqual(a.name, "dual_numbers")
        self.assertEqual(a.dim, 2)

    def test_module_specs(self):
        a = load_algebra("corpus:paper-local", 0)
        self.assertEqual(load_module(a, "S:v").dim, 1)
        self.assertEqual(load_module(a, "omega1:S:v").dim, 2)
        self.assertEqual(load_module(a, "omega2:S:v").dim, 4)
        self.assertEqual(load_module(a, "rad:P:v").dim, 2)
        self.assertEqual(load_module(a, "omega1:S:v").name, "omega1:S:v")

    def test_bad_module_specs(self):
        a = load_algebra("kupisch:2,1", 101)
        self.assertEqual(load_module(a, "cosyzygy1:S:2").dimension_vector, (1, 0))
        with self.assertRaises(SchemaError):
            load_module(a, "S")
        with self.assertRaises(SchemaError):
            load_module(a, "Q:1")
        with self.assertRaises(SchemaError):
            load_module(a, "twist:S:1")
        with self.assertRaises(UnknownName):
            load_module(a, "S:7")


class TestExitCodes(unittest.TestCase):
    """Test outputs and exit codes of the subcommands."""

    def test_validate_json(self):
        code, out, _ = run_main("--format", "json", "validate", "corpus:kx2")
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report['name'], 'kx2')
        self.assertIn('algebra', report)

    def test_validate_text_is_yaml(self):
        code, out, _ = run_main("validate", "kupisch:2,1")
        self.assertEqual(code, EXIT_OK)
        self.assertIsInstance(yaml.safe_load(out), dict)

    def test_domdim_all_methods(self):
        code, out, _ = run_main("--format", "json", "--cap", "4", "domdim", "corpus:aus-kx2", "--method", "all")
        self.assertEqual(code, EXIT_OK)
        result = json.loads(out)
        self.assertEqual({m["value"] for m in result["methods"].values()}, {2})
        self.assertEqual(result['status'], 'completed')

    def test_check_theorem(self):
        code, out, _ = run_main("--format", "json", "--cap", "4", "check-theorem", "corpus:nak-2-1",
                                "--n-max", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(json.loads(out)['reports']), 2)

    def test_conjectures_cap_after_subcommand(self):
        code, out, _ = run_main("--format", "json", "probe-conjectures", "corpus:kx2", "--cap", "3")
        self.assertEqual(code, EXIT_OK)
        result = json.loads(out)
        self.assertEqual(result['cap'], 3)
        self.assertEqual(len(result['tachikawa_dims']), 3)

    def test_conjectures_global_cap(self):
        code, out, _ = run_main("--format", "json", "--cap", "2", "probe-conjectures", "corpus:kx2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)['cap'], 2)

    def test_mho_path(self):
        code, out, _ = run_main("--format", "json", "--cap", "3", "mho-path", "corpus:kxn-2",
                                "--module", "S:v", "--length", "1")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(json.loads(out)['ending_at']['exists'])

    def test_nakayama_emit_then_validate(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = str(Path(tmp, "nak.json"))
            code, out, _ = run_main("--format", "json", "nakayama", "--kupisch", "2,3", "--shape", "cyclic",
                                    "--emit", target)
            self.assertEqual(code, EXIT_OK)
            self.assertEqual(json.loads(out)['written_to'], target)
            code, _, _ = run_main("validate", target)
            self.assertEqual(code, EXIT_OK)

    def test_corpus_list_and_verify(self):
        code, out, _ = run_main("--format", "json", "corpus", "list")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(json.loads(out)['fixtures']), 10)
        code, _, _ = run_main("--cap", "4", "--char", "101", "corpus", "verify", "nak-2-1")
        self.assertEqual(code, EXIT_OK)

    def test_corpus_mismatch(self):
        with patch('cli.main.corpus_verify', return_value={'fixture': 'kx2', 'passed': False, 'runs': []}):
            code, _, _ = run_main("corpus", "verify", "kx2")
        self.assertEqual(code, EXIT_DISAGREEMENT)

    def test_checker_disagreement(self):
        with patch('cli.main.DomdimChecker.check', return_value={'agreement': False}):
            code, out, _ = run_main("--format", "json", "domdim", "corpus:kx2")
        self.assertEqual(code, EXIT_DISAGREEMENT)
        self.assertEqual(json.loads(out)['status'], 'disagreement')

    def test_raised_disagreement(self):
        with patch('cli.main.load_algebra', side_effect=DisagreementDetected("routes differ", {"n": 1})):
            code, out, _ = run_main("--format", "json", "invariants", "corpus:kx2")
        self.assertEqual(code, EXIT_DISAGREEMENT)
        self.assertEqual(json.loads(out)['report'], {"n": 1})

    def test_input_errors(self):
        self.assertEqual(run_main("validate", "corpus:no-such")[0], EXIT_INPUT)
        self.assertEqual(run_main("validate", "/nonexistent/file.quiver")[0], EXIT_INPUT)
        self.assertEqual(run_main("--cap", "0", "domdim", "corpus:kx2")[0], EXIT_INPUT)
        self.assertEqual(run_main("nakayama", "--kupisch", "1,2")[0], EXIT_INPUT)
        self.assertEqual(run_main("--char", "100", "validate", "kupisch:2,1")[0], EXIT_INPUT)

    def test_dsl_syntax_error(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp, "broken.quiver")
            path.write_text("vertex v\nedge x: v -> v\n", encoding='utf-8')
            code, _, err = run_main("validate", str(path))
        self.assertEqual(code, EXIT_INPUT)
        self.assertIn("line 2", err)

    def test_argparse_errors(self):
        self.assertEqual(run_main()[0], EXIT_INPUT)
        self.assertEqual(run_main("domdim", "corpus:kx2", "--method", "guess")[0], EXIT_INPUT)
        self.assertEqual(run_main("--help")[0], EXIT_OK)


if __name__ == '__main__':
    unittest.main()

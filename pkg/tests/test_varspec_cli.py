import json
from fractions import Fraction

import pytest

from centralcurves import cli
from centralcurves.errors import ParseError
from centralcurves.parsing import parse_poly
from centralcurves.varspec import parse_spec, print_spec

NODE_DOC = """\
# nodal cubic with its normalization candidate
VARS x y
KIND plane-curve
GENERATORS
y^2 - x^2*(x+1)
ASSERT irreducible
ASSERT smooth-real-point
CANDIDATES
t = y / x : t^2 - x - 1
"""

KOLLAR_DOC = """\
VARS x y z
KIND surface
GENERATORS
x^3 - y^3*(1+z^2)
ASSERT irreducible
ASSERT smooth-real-point
CANDIDATES
t = x / y : t^3 - (1+z^2)
WPRIME
y
PARAM z = 1
"""

CHAIN_DOC = """\
VARS x y
KIND plane-curve
GENERATORS
y^4 - x*(x^2+y^2)
ASSERT irreducible
ASSERT smooth-real-point
CANDIDATES
t = y^2 / x : t^2 - t - x
s = y / t : s^2 - (t - 1)
"""


class TestSpecParsing:
    def test_node_document(self):
        spec = parse_spec(NODE_DOC)
        assert spec.vars == ("x", "y")
        assert spec.kind == "plane-curve"
        assert spec.generators[0] == parse_poly("y^2 - x^2*(x+1)", ("x", "y"))
        assert spec.assertions.irreducible
        assert spec.assertions.has_smooth_real_point
        assert spec.candidates[0].name == "t"

    def test_round_trip_on_canonical_form(self):
        for doc in (NODE_DOC, KOLLAR_DOC, CHAIN_DOC):
            spec = parse_spec(doc)
            canonical = print_spec(spec)
            assert parse_spec(canonical) == spec
            assert print_spec(parse_spec(canonical)) == canonical

    def test_chained_candidate_names_resolve(self):
        spec = parse_spec(CHAIN_DOC)
        second = spec.candidates[1]
        assert second.function.denominator.vars == ("t",)
        assert "t" in second.relation.vars

    def test_param_and_wprime(self):
        spec = parse_spec(KOLLAR_DOC)
        assert spec.param == ("z", Fraction(1))
        assert len(spec.wprime) == 1

    def test_errors(self):
        with pytest.raises(ParseError):
            parse_spec("KIND plane-curve\nGENERATORS\ny\n")  # missing VARS
        with pytest.raises(ParseError):
            parse_spec("VARS x y\nGENERATORS\ny\n")  # missing KIND
        with pytest.raises(ParseError):
            parse_spec("VARS x y\nKIND circle\nGENERATORS\ny\n")
        with pytest.raises(ParseError):
            parse_spec(NODE_DOC + "loose line\n")
        with pytest.raises(ParseError):
            parse_spec(NODE_DOC.replace("t = y / x", "t * y / x"))

    def test_undeclared_variable_in_generator(self):
        bad = NODE_DOC.replace("y^2 - x^2*(x+1)", "y^2 - w^3")
        with pytest.raises(Exception):
            parse_spec(bad)


def _write(tmp_path, name, content):
    path = tmp_path / name
    path.write_text(content, encoding="utf-8")
    return str(path)


class TestCli:
    def test_analyze_exit_zero(self, tmp_path, capsys):
        path = _write(tmp_path, "node.spec", NODE_DOC)
        assert cli.main(["analyze", path]) == 0
        out = capsys.readouterr().out
        assert "centrally-seminormal" in out

    def test_analyze_json_schema(self, tmp_path, capsys):
        path = _write(tmp_path, "node.spec", NODE_DOC)
        assert cli.main(["analyze", path, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema"] == "centralcurves.report/1"
        assert payload["status"] == "ok"
        assert payload["command"] == "analyze"
        cert = payload["result"]["seminormality"]
        assert cert["verdict"] == "centrally-seminormal"
        # verdict recomputable from embedded evidence
        ok = cert["nonreal_singular_count"] == 0 and all(
            entry["report"]["classification"] == "real-node"
            for entry in cert["evidence"]
        )
        assert ok == (cert["verdict"] == "centrally-seminormal")

    def test_continuity_command(self, tmp_path, capsys):
        path = _write(tmp_path, "node.spec", NODE_DOC)
        assert cli.main(["continuity", path, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["result"]["decisions"] == [["t", False]]

    def test_fiber_command(self, tmp_path, capsys):
        path = _write(tmp_path, "node.spec", NODE_DOC)
        assert cli.main(["fiber", path, "--point", "(0,0)", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["result"]["nonreal_count"] == 0
        assert len(payload["result"]["real_points"]) == 2

    def test_wc_search_command(self, tmp_path, capsys):
        path = _write(tmp_path, "chain.spec", CHAIN_DOC)
        assert cli.main(["wc-search", path, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["result"]["certificate"]["accepted"] == ["t", "s"]
        assert payload["result"]["certificate"]["final_smooth"] is True

    def test_hereditary_command(self, tmp_path, capsys):
        path = _write(tmp_path, "kollar.spec", KOLLAR_DOC)
        assert cli.main(["hereditary", path, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["result"]["degree"] == 3
        assert payload["result"]["birational"] is False

    def test_adjoin_command(self, tmp_path, capsys):
        path = _write(tmp_path, "node.spec", NODE_DOC)
        assert cli.main(["adjoin", path, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["result"]["contraction_recovers_base"] is True

    def test_input_error_exit_two(self, tmp_path, capsys):
        path = _write(tmp_path, "bad.spec", "VARS x y\nKIND plane-curve\n")
        assert cli.main(["analyze", path]) == 2
        assert cli.main(["analyze", str(tmp_path / "missing.spec")]) == 2
        path2 = _write(tmp_path, "node.spec", NODE_DOC)
        assert cli.main(["fiber", path2]) == 2  # missing --point
        assert cli.main(["fiber", path2, "--point", "(1,5)"]) == 2  # off curve
        capsys.readouterr()

    def test_resource_limit_exit_three(self, tmp_path, capsys):
        path = _write(tmp_path, "node.spec", NODE_DOC)
        assert cli.main(["analyze", path, "--max-steps", "2"]) == 3
        capsys.readouterr()

    def test_missing_spec_argument(self, capsys):
        assert cli.main(["analyze"]) == 2
        capsys.readouterr()

    def test_verify_paper_smoke(self, capsys):
        # exercised fully in the acceptance suite; here only the reporting
        assert cli.main(["verify-paper", "--serial", "--format", "json"]) in (0, 1)
        out = capsys.readouterr().out
        assert "PASS" in out

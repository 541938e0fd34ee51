# type: ignore
# pylint: disable=missing-function-docstring
import json
import os
from unittest import mock

import pytest

from cognite.g2locus.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, build_parser, run


def _output(capsys):
    return [json.loads(line) for line in capsys.readouterr().out.splitlines()]


@pytest.mark.parametrize(
    "argv, expected_result",
    [
        (["jpair", "--uv", "25 -250"], {"e1": "16000", "e2": "64000000", "split": ["8000", "8000"]}),
        (["jpair", "--uv", "0 0"], {"e1": "0", "e2": "0", "split": ["0", "0"]}),
        (
            ["classify", "--uv", "0 0"],
            {"group": "Z3semiD8", "involution_classes": 2, "uv_preimages": [["0", "0"]]},
        ),
        (
            ["classify", "--sextic", "-1 0 0 0 0 0 1"],
            {"group": "Z3semiD8", "involution_classes": 2, "uv_preimages": [["0", "0"], ["225", "6750"]]},
        ),
        (["classify", "--sextic", "0 -1 0 0 0 0 1"], {"group": "Z10", "involution_classes": 0, "uv_preimages": []}),
        (["igusa", "--sextic", "-1 0 0 0 0 0 1"], {"J2": "240", "J4": "1620", "J6": "119880", "J10": "46656"}),
        (["invert", "--sextic", "-1 0 0 0 0 0 1"], {"uv_preimages": [["0", "0"], ["225", "6750"]]}),
        (["l2", "--igusa", "240 1620 119880 46656"], {"value": "0", "on_locus": True}),
    ],
)
def test_commands(capsys, argv, expected_result):
    assert run(argv) == EXIT_OK
    assert _output(capsys) == [expected_result]


def test_uv_command(capsys):
    assert run(["uv", "--s", "1 2"]) == EXIT_OK
    (output,) = _output(capsys)
    assert (output["u"], output["v"]) == ("2", "9")
    assert set(output["invariants"]) == {"J2", "J4", "J6", "J10"}


def test_embed_command(capsys):
    assert run(["embed", "--j", "1728"]) == EXIT_OK
    (output,) = _output(capsys)
    assert output["J2"] == "276"


def test_tuples_count(capsys):
    assert run(["tuples", "count", "--case", "2", "--n", "7"]) == EXIT_OK
    (output,) = _output(capsys)
    assert output["count"] == 1
    assert output["complete"] is True
    assert output["case"] == "case2"


def test_tuples_count_random(capsys):
    argv = ["tuples", "count", "--case", "4", "--n", "7", "--mode", "random", "--budget", "500", "--seed", "2"]
    assert run(argv) == EXIT_OK
    (output,) = _output(capsys)
    assert output["complete"] is False
    assert output["samples"] == 500


def test_tuples_count_certify(capsys):
    argv = ["tuples", "count", "--case", "4", "--n", "7", "--mode", "random", "--budget", "500", "--certify"]
    assert run(argv) == EXIT_OK
    (output,) = _output(capsys)
    assert output["certified_valid"] == 24
    assert output["centralizer_order"] == 12


def test_tuples_count_checkpoint(capsys, memory_fs):
    argv = ["tuples", "count", "--case", "2", "--n", "7", "--checkpoint", "memory://cli/run.jsonl"]
    assert run(argv) == EXIT_OK
    assert memory_fs.exists("/cli/run.jsonl")
    assert _output(capsys)[0]["count"] == 1


def test_verify_identities(capsys):
    argv = ["verify-identities", "--sample-size", "2", "--seed", "3", "--suite", "family_identity"]
    assert run(argv) == EXIT_OK
    (output,) = _output(capsys)
    assert output["operation"] == "family_identity"
    assert output["passed"] is True


def test_verify_identities_empty(capsys):
    assert run(["verify-identities", "--sample-size", "0"]) == EXIT_OK
    assert _output(capsys) == []


@pytest.mark.parametrize(
    "argv, expected_result",
    [
        (["jpair", "--uv", "1"], EXIT_DOMAIN),
        (["jpair", "--uv", "0 -27/4"], EXIT_DOMAIN),
        (["uv", "--s", "1 1 0"], EXIT_DOMAIN),
        (["tuples", "count", "--case", "1", "--n", "7"], EXIT_DOMAIN),
        (["invert", "--sextic", "0 -1 0 0 0 0 1"], EXIT_DOMAIN),
        (["tuples", "count", "--case", "3", "--n", "7"], EXIT_USAGE),
        (["jpair", "--unknown", "1"], EXIT_USAGE),
        (["frobnicate"], EXIT_USAGE),
        ([], EXIT_USAGE),
    ],
)
def test_exit_codes(capsys, argv, expected_result):
    assert run(argv) == expected_result
    assert capsys.readouterr().out == ""


def test_invalid_settings():
    with mock.patch.dict(os.environ, {"G2LOCUS_THREADS": "0"}):
        assert run(["jpair", "--uv", "0 0"]) == EXIT_USAGE
    assert run(["--log-level", "chatty", "jpair", "--uv", "0 0"]) == EXIT_USAGE


def test_data_dir_setting(capsys, memory_fs):
    with mock.patch.dict(os.environ, {"G2LOCUS_DATA_DIR": "memory://missing"}):
        assert run(["igusa", "--sextic", "-1 0 0 0 0 0 1"]) == EXIT_DOMAIN
    assert capsys.readouterr().out == ""


def test_parser_subcommands():
    parser = build_parser()
    args = parser.parse_args(["tuples", "census", "--n", "7"])
    assert (args.command, args.tuples_command, args.n) == ("tuples", "census", 7)

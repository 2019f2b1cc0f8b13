import json

import pytest

from bianchi.arith import CycloNum
from bianchi.characters import CharPair, HeckeChar
from bianchi.cli import EXIT_ERROR, EXIT_MISMATCH, EXIT_OK, run_command
from bianchi.cli.commands import COMMANDS
from bianchi.eigensystem import CSV_COLUMNS
from bianchi.exception import MismatchError
from bianchi.utils import read_csv, write_csv
from bianchi.version import CONVENTION_VERSION

PAIR = "corpus:d1-a-w00-0"


def run(capsys, *argv):
    code = run_command(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    assert code == EXIT_OK
    return json.loads(out)


@pytest.fixture
def pair_file(tmp_path):
    def write(pair: CharPair):
        path = tmp_path / "pair.json"
        path.write_text(json.dumps(pair.to_json()), encoding="utf-8")
        return str(path)

    return write


def test_field_info(capsys):
    envelope = run_json(capsys, "field-info", "--bound", "30")
    assert envelope["command"] == "field-info"
    assert envelope["convention"] == CONVENTION_VERSION
    assert envelope["config"]["field_d"] == -1
    report = envelope["report"]
    assert report["field"] == {"d": -1, "discriminant": -4, "w": 4}
    assert len(report["units"]) == 4
    assert report["class_number_one"]


def test_output_is_deterministic(capsys):
    first = run(capsys, "field-info", "--field-d=-2")
    second = run(capsys, "field-info", "--field-d=-2")
    assert first == second


def test_enum_chars(capsys):
    report = run_json(capsys, "enum-chars", "--type=-1,0", "--conductor=5,2,1")["report"]
    assert report["count"] == 1
    assert report["chars"][0]["selector"] == "5,2,1/-1,0/0"


def test_eigensystem_csv_feeds_recovery(capsys, tmp_path):
    code, text = run(
        capsys, "eigensystem", f"--pair={PAIR}", "--output=csv", "--degree-one", "--prime-bound=150"
    )
    assert code == EXIT_OK
    header = [line for line in text.splitlines() if line.startswith("#")]
    assert f'# convention: "{CONVENTION_VERSION}"' in header
    assert any(line.startswith("# config: ") and '"field_d": -1' in line for line in header)
    assert '# flags: {"degree_one": true}' in header
    assert text.splitlines()[len(header)] == ",".join(CSV_COLUMNS)
    samples = tmp_path / "samples.csv"
    samples.write_text(text, encoding="utf-8")

    report = run_json(
        capsys, "recover", f"--samples={samples}", "--weight=0,0", f"--reference={PAIR}"
    )["report"]
    assert report["matches"] >= 1
    assert report["expected_pair"] is True

    # 改动一个 a_q 之后没有任何特征对与样本一致
    rows = read_csv(text)
    rows[0]["a_q"] = str(CycloNum.parse(rows[0]["a_q"]) + 1)
    samples.write_text(write_csv(rows, CSV_COLUMNS), encoding="utf-8")
    report = run_json(capsys, "recover", f"--samples={samples}", "--weight=0,0")["report"]
    assert report["matches"] == 0


@pytest.mark.parametrize(("column", "value"), [("norm", "abc"), ("a_q", "4:1,x"), ("d_q", "4:1/0")])
def test_recover_rejects_malformed_samples(capsys, tmp_path, column, value):
    code, text = run(capsys, "eigensystem", f"--pair={PAIR}", "--output=csv", "--degree-one")
    assert code == EXIT_OK
    rows = read_csv(text)
    rows[1][column] = value
    samples = tmp_path / "bad.csv"
    samples.write_text(write_csv(rows, CSV_COLUMNS), encoding="utf-8")
    code, out = run(capsys, "recover", f"--samples={samples}", "--weight=0,0")
    assert code == EXIT_ERROR
    assert out == ""


def test_bc_verify(capsys):
    envelope = run_json(
        capsys, "bc-verify", "--char=corpus:d1-bc-2+i", "--prime-bound=100", "--theta-terms=5"
    )
    assert envelope["report"]["all_match"] is True
    assert len(envelope["report"]["theta_coefficients"]) == 5
    assert envelope["flags"]["p_coprime_to_m"] is None


def test_bc_stabilize(capsys):
    envelope = run_json(capsys, "bc-stabilize", "--char=corpus:d1-bc-2+i", "--p=13")
    assert envelope["report"]["ordinary"] == "F^{αα}"
    assert envelope["flags"]["p_coprime_to_m"] is True


def test_dims_mismatch_exit_code(capsys, pair_file, bc):
    # 水平 n·(2+i) 处穷举给出的维数是预测的两倍
    code, out = run(
        capsys, "dims", "both", f"--pair-file={pair_file(bc)}", "--level=25,10,5"
    )
    assert code == EXIT_MISMATCH
    report = json.loads(out)["report"]
    assert report["diff"]["bruteforced"] == [0, 4, 0, 0]


def test_density_escalate(capsys, pair_file, bc):
    envelope = run_json(capsys, "density", f"--pair-file={pair_file(bc)}", "--escalate")
    assert envelope["flags"] == {"proxy": True, "escalate": True}
    report = envelope["report"]
    assert report["modulus"] == "[25,0,25]"
    assert report["exceeds_half"] is True
    assert report["sample_bound"] >= 200


def test_mismatch_envelope(capsys, monkeypatch):
    def broken(args, config):
        raise MismatchError("不一致", diff={"primes": ["[13,5,1]"]})

    monkeypatch.setitem(COMMANDS, "corpus", broken)
    code, out = run(capsys, "corpus")
    assert code == EXIT_MISMATCH
    assert json.loads(out)["report"] == {"mismatch": "不一致", "diff": {"primes": ["[13,5,1]"]}}


def test_excluded_weight_exit_code(capsys, pair_file, gaussian):
    pair = CharPair(HeckeChar.norm_power(gaussian, 1), HeckeChar.norm_power(gaussian, -1))
    code, out = run(capsys, "dims", "predict", f"--pair-file={pair_file(pair)}")
    assert code == EXIT_ERROR
    assert out == ""


@pytest.mark.parametrize(
    "argv",
    [
        ["no-such-command"],
        ["field-info", "--field-d=-4"],
        ["field-info", "--p=15"],
        ["eigensystem"],
        ["field-info", "--config=/nonexistent/bianchi.json"],
        ["enum-chars", "--type=1"],
        ["bc-verify", "--char=5,3,1/0,0/0"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == EXIT_ERROR
    assert out == ""


def test_config_file(capsys, tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"prime_bound": 30, "p": 5}), encoding="utf-8")
    config = run_json(capsys, "field-info", f"--config={path}")["config"]
    assert (config["prime_bound"], config["p"]) == (30, 5)
    config = run_json(capsys, "field-info", f"--config={path}", "--prime-bound=40")["config"]
    assert (config["prime_bound"], config["p"]) == (40, 5)


def test_corpus_listing(capsys):
    report = run_json(capsys, "corpus")["report"]
    assert report["pairs"][0]["name"] == "d1-a-w00-0"
    assert report["characters"][0]["name"] == "d1-bc-2+i"


def test_save_report(capsys, monkeypatch, tmp_path):
    monkeypatch.setattr("bianchi.cli.REPORT_DIR", tmp_path / "reports")
    code, out = run(capsys, "field-info", "--bound=10", "--save")
    assert code == EXIT_OK
    assert (tmp_path / "reports" / "field-info.json").read_text(encoding="utf-8") == out


def test_save_csv_report(capsys, monkeypatch, tmp_path):
    monkeypatch.setattr("bianchi.cli.REPORT_DIR", tmp_path / "reports")
    code, out = run(
        capsys, "eigensystem", f"--pair={PAIR}", "--output=csv", "--prime-bound=30", "--save"
    )
    assert code == EXIT_OK
    saved = (tmp_path / "reports" / "eigensystem.csv").read_text(encoding="utf-8")
    assert saved == out
    assert saved.startswith('# command: "eigensystem"\n')

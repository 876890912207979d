"""Command-line interface: exit codes, schemas, determinism.

Commands run in-process through main(argv); stdout is parsed back as
JSON and compared against the library, so every emitted document is
also a round-trip test of the schema.
"""

import json

import pytest

from bsfour import cli, hermform, intlinalg
from bsfour.groupring import GroupRingElt
from bsfour.hermform import HermitianForm
from bsfour.invariants import ManifoldDescriptor, W2Type


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


def write(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


def test_group_normal_form(capsys):
    doc = run_json(capsys, "group", "--k", "3", "--word", "Aba")
    assert doc["element"] == {"num": "1", "pow": 1, "t": "0"}
    assert doc["display"] == "b^(1/3)"
    doc = run_json(capsys, "group", "--k", "2", "--word", "ba",
                   "--times", "ba", "--invert")
    assert doc["element"]["t"] == "-2"


def test_group_rejects_bad_word(capsys):
    code, _ = run(capsys, "group", "--k", "2", "--word", "abc")
    assert code == 2


def test_ring_expression(capsys):
    doc = run_json(capsys, "ring", "--k", "2", "--expr", "1 + 2*ba - aB")
    assert doc["display"] == "1 - b^-2*a + 2*b*a"
    assert doc["augmentation"] == "2"
    assert doc["identity_coefficient"] == "1"
    back = GroupRingElt.from_json(doc["element"])
    assert back == GroupRingElt.parse(2, "1 + 2*ba - aB")
    inv = run_json(capsys, "ring", "--k", "2", "--expr", "1 + 2*ba - aB",
                   "--involute")
    assert GroupRingElt.from_json(inv["element"]) == back.involute()


def test_fox_formulas(capsys):
    doc = run_json(capsys, "fox", "--k", "2")
    assert doc["relator"] == "abABB"
    assert doc["derivatives"]["a"]["display"] == "1 - abA"
    assert doc["derivatives"]["b"]["display"] == "a - abAB - abABB"
    assert doc["complex"]["ranks"] == [1, 2, 1]


def test_homology_closed_form_equals_chain(capsys):
    doc = run_json(capsys, "homology", "--k", "3")
    assert doc["agree"] is True
    assert doc["closed_form"]["H1"] == {"free_rank": 1, "torsion": ["2"]}
    assert doc["closed_form"] == doc["chain_complex"]
    doc = run_json(capsys, "homology", "--k", "3", "--mod", "2")
    assert doc["coefficients"] == "Z/2"
    assert doc["closed_form"]["H2"] == {"free_rank": 0, "torsion": ["2"]}


def test_lgroups_document(capsys):
    doc = run_json(capsys, "lgroups", "--k", "5")
    assert doc["lgroups"]["L5"] == {"free_rank": 1, "torsion": ["4"]}
    assert doc["assembly"]["consistent"] is True


def test_bordism(capsys):
    doc = run_json(capsys, "bordism", "--k", "3", "--w2", "II")
    assert doc["signature_multiple"] == 8
    assert doc["torsion"] == {"free_rank": 0, "torsion": ["2"]}
    code, _ = run(capsys, "bordism", "--k", "3", "--w2", "I")
    assert code == 2
    code, _ = run(capsys, "bordism", "--k", "2", "--w2", "III")
    assert code == 2


def test_form_summary_and_round_trip(capsys, tmp_path):
    e8 = hermform.from_integer_matrix(3, intlinalg.e8_matrix())
    path = write(tmp_path / "e8.json", e8.to_json())
    doc = run_json(capsys, "form", path)
    assert doc["summary"]["rank"] == 8
    assert doc["summary"]["signature"] == 8
    assert doc["summary"]["parity"] == "even"
    assert doc["summary"]["certificated"] is True
    back = HermitianForm.from_json(doc["form"])
    assert back.matrix == e8.matrix


def test_form_try_invert(capsys, tmp_path):
    h = hermform.hyperbolic(2, 1)
    plain = HermitianForm(2, h.matrix)  # certificate dropped
    path = write(tmp_path / "plain.json", plain.to_json())
    doc = run_json(capsys, "form", path)
    assert doc["summary"]["certificated"] is False
    doc = run_json(capsys, "form", path, "--try-invert")
    assert doc["summary"]["certificated"] is True
    assert HermitianForm.from_json(doc["form"]).inverse is not None


def test_form_bad_certificate_exits_2(capsys, tmp_path):
    h = hermform.hyperbolic(2, 1)
    doc = h.to_json()
    doc["inverse"][0][0] = GroupRingElt.one(2).to_json()  # breaks A*C = 1
    path = write(tmp_path / "bad.json", doc)
    code, _ = run(capsys, "form", path)
    assert code == 2


def test_classify_flow(capsys, tmp_path):
    k = 2
    h = hermform.hyperbolic(k, 1)
    d = ManifoldDescriptor(k, h, W2Type.II, 0)
    p1 = write(tmp_path / "d1.json", d.to_json())
    p2 = write(tmp_path / "d2.json", d.to_json())
    ident = hermform.matrix_to_json(
        tuple(tuple(GroupRingElt.one(k) if i == j else GroupRingElt.zero(k)
                    for j in range(2)) for i in range(2)), k)
    pu = write(tmp_path / "u.json", ident)
    doc = run_json(capsys, "classify", p1, p2)
    assert doc["verdict"] == "Unknown"
    doc = run_json(capsys, "classify", p1, p2, "--isometry", pu)
    assert doc["verdict"] == "Homeomorphic"

    odd = hermform.from_integer_matrix(k, [[1, 0], [0, -1]])
    q1 = write(tmp_path / "i0.json",
               ManifoldDescriptor(k, odd, W2Type.I, 0).to_json())
    q2 = write(tmp_path / "i1.json",
               ManifoldDescriptor(k, odd, W2Type.I, 1).to_json())
    doc = run_json(capsys, "classify", q1, q2)
    assert doc["verdict"] == "NotHomeomorphic"
    assert any("Kirby-Siebenmann" in r for r in doc["reasons"])


def test_classify_inconsistent_descriptor_exits_3(capsys, tmp_path):
    k = 2
    d = ManifoldDescriptor(k, hermform.hyperbolic(k, 1), W2Type.II, 0)
    good = d.to_json()
    bad = dict(good)
    bad["ks"] = 1  # Rochlin forces 0 here
    p1 = write(tmp_path / "good.json", good)
    p2 = write(tmp_path / "bad.json", bad)
    code, _ = run(capsys, "classify", p1, p2)
    assert code == 3


def test_realize_counts(capsys, tmp_path):
    odd = hermform.from_integer_matrix(2, [[1, 0], [0, -1]])
    p = write(tmp_path / "odd.json", odd.to_json())
    doc = run_json(capsys, "realize", p)
    assert doc["count"] == 2
    assert [d["w2"] for d in doc["descriptors"]] == ["I", "I"]

    p = write(tmp_path / "heven.json", hermform.hyperbolic(2, 1).to_json())
    doc = run_json(capsys, "realize", p)
    assert doc["count"] == 1
    assert doc["descriptors"][0]["w2"] == "II"

    p = write(tmp_path / "hodd.json", hermform.hyperbolic(3, 1).to_json())
    doc = run_json(capsys, "realize", p)
    assert doc["count"] == 2
    assert [d["w2"] for d in doc["descriptors"]] == ["II", "III"]
    for d in doc["descriptors"]:
        ManifoldDescriptor.from_json(d)  # all emitted descriptors validate


def test_realize_requires_certificate(capsys, tmp_path):
    plain = HermitianForm(2, hermform.hyperbolic(2, 1).matrix)
    p = write(tmp_path / "plain.json", plain.to_json())
    code, _ = run(capsys, "realize", p)
    assert code == 2
    doc = run_json(capsys, "realize", p, "--try-invert")
    assert doc["count"] == 1


def test_report_rows(capsys):
    doc = run_json(capsys, "report", "--k-range", "2..3")
    assert [r["k"] for r in doc["rows"]] == [2, 3]
    row = doc["rows"][1]
    assert row["H1"] == "Z + Z/2"
    assert row["bordism"] == "8Z + Z/2"
    assert row["oracle_check"] == "ok"
    doc = run_json(capsys, "report", "--k-range", "3..2")
    assert doc["rows"] == []
    code, _ = run(capsys, "report", "--k-range", "2-3")
    assert code == 2


def test_report_pretty_table(capsys):
    code, out = run(capsys, "report", "--k-range", "0..0", "--pretty")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["k", "H0", "H1", "H2", "H2_mod2",
                                "whitehead", "L4", "L5", "bordism",
                                "oracle_check"]
    assert lines[2].startswith("0  Z")


def test_usage_errors_exit_64(capsys):
    code, _ = run(capsys, "nosuch")
    assert code == 64
    code, _ = run(capsys, "group", "--k", "2")  # missing --word
    assert code == 64
    code, _ = run(capsys)
    assert code == 64


def test_missing_file_exits_2(capsys, tmp_path):
    code, _ = run(capsys, "form", str(tmp_path / "absent.json"))
    assert code == 2
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{not json")
    code, _ = run(capsys, "form", str(garbled))
    assert code == 2


def test_output_is_deterministic(capsys):
    _, first = run(capsys, "report", "--k-range", "-3..3")
    _, second = run(capsys, "report", "--k-range", "-3..3")
    assert first == second
    _, first = run(capsys, "ring", "--k", "2", "--expr", "ba + ab + 1")
    _, second = run(capsys, "ring", "--k", "2", "--expr", "1 + ab + ba")
    assert first == second  # canonical term order

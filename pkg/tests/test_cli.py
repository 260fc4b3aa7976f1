"""Command line behavior: output shapes, exit codes, piping, and
determinism. Runs in-process through main(argv); one test drives the
real interpreter to prove the module entry point works."""

import json
import subprocess
import sys

import pytest

from resichain import canonical_signature, chain_from_json
from resichain.cli import main
from resichain.constructors import com, go, nested_sum
from resichain.pointed import PointedChain


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def chain_file(tmp_path, chain, name="chain.json"):
    path = tmp_path / name
    path.write_text(json.dumps(chain.to_json()))
    return str(path)


# --- construction and inspection ------------------------------------------


def test_make_emits_the_chain_as_json(capsys):
    code, got = run_json(capsys, "make", "go:1")
    assert code == 0
    assert got == {"size": 2, "unit": 1, "mult": [[0, 0], [0, 1]], "labels": ["c1", "e"]}
    assert list(got) == ["size", "unit", "mult", "labels"]


def test_make_glues_sum_specs(capsys):
    code, got = run_json(capsys, "make", "sum:com:0,0+go:1")
    assert code == 0
    assert got["labels"] == ["b0", "c1", "e", "a0"]


def test_make_rejects_unknown_spec(capsys):
    with pytest.raises(SystemExit) as err:
        main(["make", "bogus:1"])
    assert err.value.code == 2


def test_make_reports_domain_errors_as_payload(capsys):
    code, got = run_json(capsys, "make", "sum:go:1+com:0,0")
    assert code == 1
    assert got["error"] == "NotAdmissible"
    assert got["witness"] == 0


def test_check_reports_the_predicate_quadruple(capsys, tmp_path):
    path = chain_file(tmp_path, com(1, 1))
    code, got = run_json(capsys, "check", path)
    assert code == 0
    assert got == {
        "commutative": True,
        "idempotent": True,
        "star_involutive": False,
        "admissible": True,
    }
    assert list(got) == ["commutative", "idempotent", "star_involutive", "admissible"]


def test_show_renders_a_table(capsys, tmp_path):
    path = chain_file(tmp_path, com(0, 0))
    code, out = run(capsys, "show", "--format", "table", path)
    assert code == 0
    assert out.splitlines()[0] == "b0 < e < a0"
    assert "size 3" in out


def test_unknown_verb_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


# --- per-module verbs ------------------------------------------------------


def test_residual_by_label(capsys, tmp_path):
    path = chain_file(tmp_path, com(1, 1))
    code, got = run_json(capsys, "residual", "a1", "b1", path)
    assert code == 0
    assert got == {"x": "a1", "y": "b1", "side": "left", "result": "b1"}


def test_residual_rejects_unknown_labels(capsys, tmp_path):
    path = chain_file(tmp_path, com(1, 1))
    with pytest.raises(SystemExit) as err:
        main(["residual", "zz", "b1", path])
    assert err.value.code == 2


def test_decompose_prints_the_signature(capsys, tmp_path):
    base, _ = nested_sum([com(1, 1), go(2)])
    path = chain_file(tmp_path, base)
    code, got = run_json(capsys, "decompose", path)
    assert code == 0
    assert got["text"] == "C(1,1) ⊞ Go_2"
    assert got["pairs"] == [[1, 1]] and got["p"] == 2


def test_embed_counts_placements(capsys, tmp_path):
    a = chain_file(tmp_path, go(1), "a.json")
    b = chain_file(tmp_path, go(3), "b.json")
    code, got = run_json(capsys, "embed", a, b)
    assert code == 0
    assert got["count"] == 3
    assert sorted(m["image"] for m in got["maps"]) == [[0, 3], [1, 3], [2, 3]]


def test_homs_lists_both_collapses(capsys, tmp_path):
    a = chain_file(tmp_path, go(2), "a.json")
    b = chain_file(tmp_path, go(1), "b.json")
    code, got = run_json(capsys, "homs", a, b)
    assert code == 0
    assert got["count"] == 2
    assert sorted(m["image"] for m in got["maps"]) == [[0, 1, 1], [1, 1, 1]]


def test_congruence_listing(capsys, tmp_path):
    path = chain_file(tmp_path, com(1, 1))
    code, got = run_json(capsys, "congruences", path)
    assert code == 0
    assert got["count"] == 3
    kernels = [c["kernel"] for c in got["congruences"]]
    assert ["b0", "a0"] in kernels


def test_quotient_collapses_the_inner_interval(capsys, tmp_path):
    path = chain_file(tmp_path, com(1, 1))
    code, got = run_json(capsys, "quotient", "--kernel", "b0,a0", path)
    assert code == 0
    assert canonical_signature(chain_from_json(got)) == canonical_signature(go(1))


def test_quotient_rejects_a_non_kernel_interval(capsys, tmp_path):
    path = chain_file(tmp_path, com(1, 1))
    code, got = run_json(capsys, "quotient", "--kernel", "b0,a1", path)
    assert code == 1
    assert got["error"] == "InvalidKernel"


def test_enumerate_with_filters(capsys):
    code, got = run_json(capsys, "enumerate", "3", "--commutative", "--idempotent")
    assert code == 0
    assert got["count"] == 2 and len(got["chains"]) == 2


def test_enumeration_cap_comes_from_the_environment(capsys, monkeypatch):
    monkeypatch.setenv("RESICHAIN_MAX_SIZE", "3")
    code, got = run_json(capsys, "enumerate", "4")
    assert code == 1
    assert got["error"] == "SizeTooLarge"


# --- amalgamation and classification ---------------------------------------


def span_file(tmp_path, span_dict, name="span.json"):
    path = tmp_path / name
    path.write_text(json.dumps(span_dict))
    return str(path)


def crossing_span_dict():
    return {
        "A": go(1).to_json(),
        "B": go(2).to_json(),
        "C": go(2).to_json(),
        "iB": [0, 2],
        "iC": [1, 2],
    }


def test_amalgamate_searches_within_a_class(capsys, tmp_path):
    path = span_file(tmp_path, crossing_span_dict())
    code, got = run_json(capsys, "amalgamate", path, "--class", "e:w")
    assert code == 0
    assert got["found"] is True
    assert canonical_signature(chain_from_json(got["D"])) == canonical_signature(go(3))
    assert got["one_sided"] is False


def test_amalgamate_refutes_in_a_complete_finite_class(capsys, tmp_path):
    path = span_file(tmp_path, crossing_span_dict())
    code, got = run_json(
        capsys, "amalgamate", path, "--class", "e:1", "--one-sided"
    )
    assert code == 0
    assert got == {"found": False, "refuted": True, "checked": 2}


def test_amalgamate_constructive_zipper(capsys, tmp_path):
    a, b, c = com(0, 0), com(1, 0), com(0, 1)
    span = {
        "A": a.to_json(),
        "B": b.to_json(),
        "C": c.to_json(),
        "iB": [1, 2, 3],
        "iC": [0, 1, 3],
    }
    path = span_file(tmp_path, span)
    code, got = run_json(capsys, "amalgamate", path, "--construct")
    assert code == 0
    assert got["found"] is True and got["verified"] is True
    assert canonical_signature(chain_from_json(got["D"])) == canonical_signature(
        com(1, 1)
    )


def test_amalgamate_rejects_a_broken_span(capsys, tmp_path):
    bad = crossing_span_dict()
    bad["iB"] = [2, 2]
    path = span_file(tmp_path, bad)
    code, got = run_json(capsys, "amalgamate", path)
    assert code == 1
    assert got["error"] == "InvalidSpan"


def generators_file(tmp_path, chains, name="gens.json"):
    path = tmp_path / name
    path.write_text(json.dumps([c.to_json() for c in chains]))
    return str(path)


def test_classify_names_the_generated_class(capsys, tmp_path):
    path = generators_file(tmp_path, [com(0, 0)])
    code, got = run_json(capsys, "classify", path)
    assert code == 0
    assert got == {"class": "fin:0,0,0", "ap": True}


def test_classify_reports_no_ap_with_audit_and_witness(capsys, tmp_path):
    path = generators_file(tmp_path, [go(2)])
    code, got = run_json(capsys, "classify", path)
    assert code == 0
    assert got["class"] is None and got["ap"] is False
    assert any(v["rule"] == "i" for v in got["audit"])
    assert got["witness"]["iB"] == [0, 2] and got["witness"]["iC"] == [1, 2]


def test_classify_accepts_a_wrapped_generators_object(capsys, tmp_path):
    path = tmp_path / "wrapped.json"
    path.write_text(json.dumps({"generators": [com(0, 0).to_json()]}))
    code, got = run_json(capsys, "classify", str(path))
    assert code == 0
    assert got["class"] == "fin:0,0,0"


def test_ap_echoes_a_named_class(capsys):
    code, got = run_json(capsys, "ap", "--class", "fin:1,0,1+e:1")
    assert code == 0
    assert got == {"ap": True, "class": "fin:1,0,1+e:1"}


def test_ap_needs_generators_or_a_class(capsys):
    with pytest.raises(SystemExit) as err:
        main(["ap"])
    assert err.value.code == 2


def test_ap_verdict_from_generators(capsys, tmp_path):
    path = generators_file(tmp_path, [go(2)])
    code, got = run_json(capsys, "ap", path)
    assert code == 0
    assert got["ap"] is False and got["witness_complete"] is True


# --- words, symbolic chain, pointed ----------------------------------------


def test_words_leq(capsys):
    code, got = run_json(capsys, "words", "leq", "per:0@0", "fin:{0}")
    assert code == 0
    assert got == {"op": "leq", "w1": "per:0@0", "w2": "fin:{0}", "holds": True}
    code, got = run_json(capsys, "words", "leq", "fin:{0}", "per:0@0")
    assert got["holds"] is False


def test_words_leq_needs_two_words(capsys):
    with pytest.raises(SystemExit) as err:
        main(["words", "leq", "per:0@0"])
    assert err.value.code == 2


def test_words_minimality_report(capsys):
    code, got = run_json(capsys, "words", "minimal", "fin:{}")
    assert code == 0
    assert got["op"] == "minimal" and got["minimal"] is True
    assert got["recurrence_offset"] == 1


def test_asop_frozen_product(capsys):
    code, got = run_json(capsys, "as-op", "--set", "per:01", "mul", "a:0", "b:0")
    assert code == 0
    assert got == {"result": "b:0"}


def test_asop_star_and_reach(capsys):
    code, got = run_json(
        capsys, "as-op", "--set", "per:01", "unary", "a:0", "--which", "star"
    )
    assert got == {"result": "b:-1"}
    code, got = run_json(
        capsys, "as-op", "--set", "per:01", "reach", "a:0", "--depth", "1"
    )
    assert got == {"result": ["b:-1", "b:0", "a:0"]}


def test_pcondition(capsys, tmp_path):
    blob = PointedChain(com(1, 0), 0).to_json()
    path = tmp_path / "p.json"
    path.write_text(json.dumps(blob))
    code, got = run_json(capsys, "pcondition", str(path))
    assert code == 0
    assert got == {"condition": "2b"}


def test_ppartition_buckets_a_directory(capsys, tmp_path):
    pdir = tmp_path / "pool"
    pdir.mkdir()
    entries = {
        "seed1b.json": PointedChain(com(0, 0), 0),
        "seed2a.json": PointedChain(go(1), 0),
        "unit.json": PointedChain(com(0, 0), 1),
    }
    for name, p in entries.items():
        (pdir / name).write_text(json.dumps(p.to_json()))
    code, got = run_json(capsys, "ppartition", str(pdir))
    assert code == 0
    assert got["cross_embeddings"] == 0
    assert got["buckets"]["1b"] == ["seed1b.json"]
    assert got["buckets"]["2a"] == ["seed2a.json"]
    assert got["buckets"]["1a"] == ["unit.json"]
    assert got["buckets"]["2c"] == []


# --- verification suites ----------------------------------------------------


def test_verify_counting_suite_passes(capsys):
    code, got = run_json(capsys, "verify", "lemma:counting", "--max-size", "5")
    assert code == 0
    assert got["suite"] == "lemma:counting"
    assert got["failed"] == 0 and got["failures"] == []
    assert got["passed"] == got["checked"] > 0


def test_verify_rejects_unknown_suites(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "nope"])
    assert err.value.code == 2


def test_verify_jobs_flag_does_not_change_output(capsys):
    _, first = run(capsys, "verify", "lemma:counting", "--max-size", "4", "--jobs", "1")
    _, second = run(capsys, "verify", "lemma:counting", "--max-size", "4", "--jobs", "2")
    assert first == second


# --- determinism and piping --------------------------------------------------


def test_output_is_deterministic(capsys, tmp_path):
    path = generators_file(tmp_path, [go(2)])
    _, first = run(capsys, "classify", path)
    _, second = run(capsys, "classify", path)
    assert first == second


def test_pipe_round_trip_through_the_interpreter():
    pipeline = (
        f"{sys.executable} -m resichain.cli make com:1,1 | "
        f"{sys.executable} -m resichain.cli show --json"
    )
    out = subprocess.run(
        pipeline, shell=True, capture_output=True, text=True, check=True
    )
    reparsed = chain_from_json(json.loads(out.stdout))
    assert canonical_signature(reparsed) == canonical_signature(com(1, 1))

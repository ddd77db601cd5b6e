import asyncio
import json
from pathlib import Path
from typing import Dict

import pytest
from baby_steps import given, then, when

from acrfp.audio import load_wav, save_wav
from acrfp.core import ExitCode
from acrfp.refdb import load_db

from ._utils import run_cli

Workspace = Dict[str, Path]


def cli(*argv: str) -> None:
    code, _, err = asyncio.run(run_cli(*argv))
    assert code == ExitCode.OK, err


@pytest.fixture(scope="module")
def workspace(tmp_path_factory) -> Workspace:
    root = tmp_path_factory.mktemp("acrfp")
    paths = {
        "config": root / "acrfp.json",
        "corpus": root / "corpus",
        "model": root / "model.acpc",
        "db": root / "refs.acdb",
        "index": root / "refs.acix",
        "query": root / "query.wav",
    }
    # three 10 s clips give 213 pre-fingerprints, fewer than the default minimum
    paths["config"].write_text(json.dumps({"Proposed": {"pca_min_samples": 100}}))
    config = ["--config", str(paths["config"]), "--threads", "1"]
    manifest = str(paths["corpus"] / "manifest.json")

    cli("eval", "synth", "--out", str(paths["corpus"]), "--clips", "3", "--seconds", "10")
    cli(*config, "train-pca", "--corpus", manifest, "--out", str(paths["model"]))
    cli(*config, "build-db", "--corpus", manifest, "--pca", str(paths["model"]),
        "--out", str(paths["db"]))
    cli(*config, "build-index", "--db", str(paths["db"]), "--type", "ivf",
        "--out", str(paths["index"]))

    # 3 s of clip_0001 starting on the fingerprint grid, at 1.28 s
    clip = load_wav(paths["corpus"] / "clip_0001.wav")
    save_wav(paths["query"], clip.excerpt(10 * 2048, 3 * 16000))
    return paths


def test_db_built(workspace: Workspace):
    with when:
        db = load_db(workspace["db"])

    with then:
        assert db.content_ids == ["clip_0000", "clip_0001", "clip_0002"]
        assert len(db) == 3 * 71
        assert db.pca is not None and db.pca.trained_on == 3 * 71


async def test_query_with_index(workspace: Workspace):
    with when:
        code, out, _ = await run_cli("query", "--db", str(workspace["db"]),
                                     "--index", str(workspace["index"]), "--nprobe", "4",
                                     "--audio", str(workspace["query"]),
                                     "--ground-truth", "clip_0001")

    with then:
        assert code == ExitCode.OK
        results = [json.loads(line) for line in out.splitlines()]
        assert len(results) == 1
        result = results[0]
        assert result["status"] == "matched"
        assert result["content_id"] == "clip_0001"
        assert result["ground_truth"] == "clip_0001"
        assert result["offset"] == pytest.approx(1.28, abs=1e-6)
        assert result["votes"] == 10


async def test_query_exhaustive_to_file(workspace: Workspace, tmp_path: Path):
    with given:
        out_path = tmp_path / "results.jsonl"

    with when:
        code, out, _ = await run_cli("query", "--db", str(workspace["db"]),
                                     "--audio", str(workspace["query"]),
                                     "--seg-len", "1.0", "--out", str(out_path))

    with then:
        assert code == ExitCode.OK
        assert out == ""
        results = [json.loads(line) for line in out_path.read_text().splitlines()]
        assert [r["content_id"] for r in results] == ["clip_0001", "clip_0001"]
        assert [r["segment_start"] for r in results] == [0.0, 1.024]
        assert all("ground_truth" not in r for r in results)


async def test_inspect_index(workspace: Workspace):
    with when:
        code, out, _ = await run_cli("inspect", str(workspace["index"]))

    with then:
        assert code == ExitCode.OK
        assert "type: ivf" in out
        assert "db fingerprints: 213" in out


async def test_bench(workspace: Workspace):
    with when:
        code, out, _ = await run_cli("bench", "--db", str(workspace["db"]),
                                     "--index", str(workspace["index"]),
                                     "--runs", "1", "--min-queries", "10")

    with then:
        assert code == ExitCode.OK
        assert "Retrieval speed" in out


async def test_fingerprint_minhash(workspace: Workspace):
    with when:
        code, out, _ = await run_cli("fingerprint", str(workspace["query"]), "--kind", "minhash")

    with then:
        assert code == ExitCode.OK
        records = [json.loads(line) for line in out.splitlines()]
        assert len(records) == 16
        assert records[1]["timestamp"] == 0.128
        assert all(len(r["values"]) == 72 for r in records)


async def test_fingerprint_proposed_skip(workspace: Workspace):
    with when:
        code, out, _ = await run_cli("fingerprint", str(workspace["query"]),
                                     "--pca", str(workspace["model"]), "--skip", "3")

    with then:
        assert code == ExitCode.OK
        records = [json.loads(line) for line in out.splitlines()]
        assert [r["timestamp"] for r in records] == [0.0, 0.512, 1.024, 1.536]
        assert all(len(r["values"]) == 32 for r in records)


async def test_degrade(workspace: Workspace, tmp_path: Path):
    with given:
        out_path = tmp_path / "louder.wav"

    with when:
        code, _, _ = await run_cli("degrade", str(workspace["query"]), str(out_path),
                                   "--noise", "volume", "--param", "6")

    with then:
        assert code == ExitCode.OK
        assert load_wav(out_path).n_frames == 3 * 16000


async def test_index_of_other_db_rejected(workspace: Workspace, tmp_path: Path):
    with given:
        other = tmp_path / "sparse.acdb"
        manifest = str(workspace["corpus"] / "manifest.json")
        code, _, err = await run_cli("build-db", "--corpus", manifest,
                                     "--pca", str(workspace["model"]), "--skip", "5",
                                     "--out", str(other))
        assert code == ExitCode.OK, err

    with when:
        code, _, err = await run_cli("query", "--db", str(other),
                                     "--index", str(workspace["index"]),
                                     "--audio", str(workspace["query"]))

    with then:
        assert code == ExitCode.FILE
        assert err.startswith("error: Index ")


async def test_eval_run(workspace: Workspace, tmp_path: Path):
    with given:
        spec = tmp_path / "spec.json"
        spec.write_text(json.dumps({
            "manifest": str(workspace["corpus"] / "manifest.json"),
            "out": "results",
            "experiments": ["noise", "false_positive"],
            "kinds": ["minhash"],
            "noises": ["clean"],
        }))

    with when:
        code, out, _ = await run_cli("--config", str(workspace["config"]), "eval", "run",
                                     "--spec", str(spec), "--reporter", "silent")

    with then:
        assert code == ExitCode.OK
        assert out == ""
        results = tmp_path / "results"
        assert len((results / "noise.csv").read_text().splitlines()) == 2
        assert len((results / "false_positive.csv").read_text().splitlines()) == 2
        assert len((results / "cells.csv").read_text().splitlines()) == 3

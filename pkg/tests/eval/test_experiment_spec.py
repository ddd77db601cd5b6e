import json
from pathlib import Path

import pytest
from baby_steps import given, then, when
from pytest import raises

from acrfp.core import ArtifactNotFoundError, ConfigError, ManifestError
from acrfp.degrade import NOISE_SUITE_EXPRS, parse_noise
from acrfp.eval import (
    DEFAULT_SKIP_NOISE,
    DEFAULT_SKIPS,
    ExperimentSpec,
    ExperimentType,
    experiment_spec_from_dict,
    load_experiment_spec,
)
from acrfp.fingerprint import FingerprintKind
from acrfp.index import IndexType


def test_defaults(tmp_path: Path):
    with when:
        spec = experiment_spec_from_dict({"manifest": "corpus/manifest.json", "out": "results"},
                                         base_dir=tmp_path)

    with then:
        assert spec.manifest == tmp_path / "corpus" / "manifest.json"
        assert spec.out_dir == tmp_path / "results"
        assert spec.experiments == tuple(ExperimentType)
        assert [n.label for n in spec.noises] == [parse_noise(e).label for e in NOISE_SUITE_EXPRS]
        assert spec.skips == DEFAULT_SKIPS == (0, 1, 3, 5, 7)
        assert spec.skip_noise == parse_noise(DEFAULT_SKIP_NOISE)
        assert spec.kinds == (FingerprintKind.PROPOSED, FingerprintKind.MINHASH)
        assert spec.pca is None


def test_operating_points(tmp_path: Path):
    with given:
        spec = experiment_spec_from_dict({"manifest": "m.json", "out": "o", "proposed_skip": 3,
                                          "proposed_index": "exhaustive"}, base_dir=tmp_path)

    with when:
        proposed = spec.operating_skip(FingerprintKind.PROPOSED), \
            spec.operating_index(FingerprintKind.PROPOSED)
        minhash = spec.operating_skip(FingerprintKind.MINHASH), \
            spec.operating_index(FingerprintKind.MINHASH)

    with then:
        assert proposed == (3, IndexType.EXHAUSTIVE)
        assert minhash == (0, IndexType.EXHAUSTIVE)


def test_explicit_values(tmp_path: Path):
    with when:
        spec = experiment_spec_from_dict({
            "manifest": "m.json",
            "out": "o",
            "experiments": ["noise", "false_positive"],
            "kinds": ["minhash"],
            "noises": ["clean", "volume_6db"],
            "skips": [0, 2],
            "pca": "model.acpc",
            "seed": 7,
        }, base_dir=tmp_path)

    with then:
        assert spec.experiments == (ExperimentType.NOISE, ExperimentType.FALSE_POSITIVE)
        assert spec.kinds == (FingerprintKind.MINHASH,)
        assert spec.noises == (parse_noise("clean", 7), parse_noise("volume_6db", 7))
        assert all(n.seed == 7 for n in spec.noises)
        assert spec.skips == (0, 2)
        assert spec.pca == tmp_path / "model.acpc"
        assert spec.seed == 7


def test_out_override(tmp_path: Path):
    with when:
        spec = experiment_spec_from_dict({"manifest": "m.json"}, out_dir=tmp_path / "elsewhere")

    with then:
        assert spec.out_dir == tmp_path / "elsewhere"


@pytest.mark.parametrize(("document", "message"), [
    ([], "Experiment spec must be a JSON object"),
    ({"manifest": "m.json", "out": "o", "color": 1}, "Unknown experiment spec key(s): color"),
    ({"out": "o"}, "Experiment spec needs a 'manifest' path"),
    ({"manifest": "m.json"}, "Experiment spec needs an 'out' directory (or pass --out)"),
    ({"manifest": "m.json", "out": "o", "kinds": ["chroma"]},
     "Experiment spec 'kinds' accepts only: proposed, minhash"),
    ({"manifest": "m.json", "out": "o", "experiments": "noise"},
     "Experiment spec 'experiments' must be a list"),
    ({"manifest": "m.json", "out": "o", "skips": [0, "1"]},
     "Experiment spec 'skips' must be a list of integers"),
    ({"manifest": "m.json", "out": "o", "seed": True},
     "Experiment spec 'seed' must be an integer, got True"),
    ({"manifest": "m.json", "out": "o", "noises": "clean"},
     "Experiment spec 'noises' must be a list of expressions"),
])
def test_invalid(document, message):
    with when, raises(ConfigError) as exc_info:
        experiment_spec_from_dict(document)

    with then:
        assert str(exc_info.value) == message


@pytest.mark.parametrize("document", [
    {"manifest": "m.json", "out": "o", "noises": ["volume(abc)"]},
    {"manifest": "m.json", "out": "o", "skips": [-1]},
    {"manifest": "m.json", "out": "o", "kinds": []},
    {"manifest": "m.json", "out": "o", "proposed_index": "hnsw"},
])
def test_invalid_values(document):
    with when, raises(ConfigError) as exc_info:
        experiment_spec_from_dict(document)

    with then:
        assert str(exc_info.value).startswith("Invalid experiment spec: ")


def test_load_resolves_relative_paths(tmp_path: Path):
    with given:
        path = tmp_path / "specs" / "spec.json"
        path.parent.mkdir()
        path.write_text(json.dumps({"manifest": "../corpus/manifest.json", "out": "out"}))

    with when:
        spec = load_experiment_spec(path)

    with then:
        assert spec.manifest == tmp_path / "specs" / ".." / "corpus" / "manifest.json"
        assert spec.out_dir == tmp_path / "specs" / "out"


def test_load_missing(tmp_path: Path):
    with when, raises(ConfigError) as exc_info:
        load_experiment_spec(tmp_path / "spec.json")

    with then:
        assert str(exc_info.value) == f"Experiment spec '{tmp_path / 'spec.json'}' does not exist"


def test_load_not_json(tmp_path: Path):
    with given:
        path = tmp_path / "spec.json"
        path.write_text("{manifest")

    with when, raises(ConfigError) as exc_info:
        load_experiment_spec(path)

    with then:
        assert str(exc_info.value).startswith(f"Failed to read experiment spec '{path}': ")


def test_check_files(tmp_path: Path):
    with given:
        spec = ExperimentSpec(tmp_path / "manifest.json", tmp_path / "out")

    with when, raises(ManifestError):
        spec.check_files()


def test_check_files_pca(tmp_path: Path):
    with given:
        manifest = tmp_path / "manifest.json"
        manifest.write_text("[]")
        spec = ExperimentSpec(manifest, tmp_path / "out", pca=tmp_path / "model.acpc")

    with when, raises(ArtifactNotFoundError):
        spec.check_files()


def test_with_out_dir(tmp_path: Path):
    with given:
        spec = ExperimentSpec(tmp_path / "manifest.json", tmp_path / "out")

    with when:
        res = spec.with_out_dir(tmp_path / "other")

    with then:
        assert res.out_dir == tmp_path / "other"
        assert spec.out_dir == tmp_path / "out"

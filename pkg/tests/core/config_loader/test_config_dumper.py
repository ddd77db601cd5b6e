import json

from baby_steps import given, then, when

from acrfp import Config
from acrfp.core import ConfigDumper, ConfigFileLoader, config_digest


def test_dump_defaults():
    with when:
        document = json.loads(ConfigDumper().dumps(Config))

    with then:
        assert document["threads"] == 0
        assert document["Window"] == {"window_len": 64, "stride": 8}
        assert document["Match"]["max_hamming"] == 64
        assert "path" not in document


async def test_dump_load_round_trip(tmp_path):
    with given:
        path = tmp_path / "acrfp.json"
        path.write_text(ConfigDumper().dumps(Config))

    with when:
        loaded = await ConfigFileLoader(Config).load(path)

    with then:
        assert ConfigDumper().to_dict(loaded) == ConfigDumper().to_dict(Config)
        assert config_digest(loaded) == config_digest(Config)


def test_config_digest_changes():
    with given:
        changed = ConfigFileLoader(Config).apply({"Match": {"top_k": 7}})

    with when:
        digest = config_digest(changed)

    with then:
        assert len(digest) == 12
        assert digest != config_digest(Config)

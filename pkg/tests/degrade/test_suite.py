from baby_steps import then, when

from acrfp.degrade import NOISE_SUITE, NOISE_SUITE_EXPRS, NoiseKind, noise_suite


def test_noise_suite_covers_every_kind():
    with when:
        kinds = {spec.kind for spec in NOISE_SUITE}

    with then:
        assert kinds == set(NoiseKind) - {NoiseKind.CLEAN}
        assert len(NOISE_SUITE) == len(NOISE_SUITE_EXPRS) == 29


def test_noise_suite_seed():
    with when:
        suite = noise_suite(7)

    with then:
        assert all(spec.seed == 7 for spec in suite)
        assert [spec.label for spec in suite] == [spec.label for spec in NOISE_SUITE]

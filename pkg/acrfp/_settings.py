from dataclasses import dataclass, field

from .core import ConfigType, InvalidParameterError, config_digest
from .degrade import DegradeSettings
from .eval import EvalSettings
from .fingerprint import MinHashSettings, PcaSettings, PipelineSettings, WindowConfig
from .index import IndexSettings, IndexType
from .matcher import MatchSettings

__all__ = ("Settings", "settings_from_config",)


@dataclass(frozen=True)
class Settings:
    """
    Everything a command needs, converted once from the config tree.

    Library functions take the individual parts; only the command layer sees the config.
    """

    pipeline: PipelineSettings = field(default_factory=PipelineSettings)
    degrade: DegradeSettings = field(default_factory=DegradeSettings)
    match: MatchSettings = field(default_factory=MatchSettings)
    index: IndexSettings = field(default_factory=IndexSettings)
    pca: PcaSettings = field(default_factory=PcaSettings)
    minhash: MinHashSettings = field(default_factory=MinHashSettings)
    eval: EvalSettings = field(default_factory=EvalSettings)
    threads: int = 0
    config_hash: str = ""


def settings_from_config(config: ConfigType) -> Settings:
    """
    Convert a loaded config tree into `Settings`.

    :raises InvalidParameterError: If a value is out of range, e.g. ``stride >= window_len``.
    """
    audio, spectral = config.Audio, config.Spectral
    pipeline = PipelineSettings(
        sample_rate=audio.sample_rate,
        min_input_rate=audio.min_input_rate,
        kaiser_beta=audio.kaiser_beta,
        taps_per_phase=audio.taps_per_phase,
        frame_size=spectral.frame_size,
        hop=spectral.hop,
        mel_bands=spectral.mel_bands,
        mel_f_lo=spectral.mel_f_lo,
        mel_f_hi=spectral.mel_f_hi,
        bark_bands=spectral.bark_bands,
        bark_f_lo=spectral.bark_f_lo,
        bark_f_hi=spectral.bark_f_hi,
        log_floor=spectral.log_floor,
        window=WindowConfig(config.Window.window_len, config.Window.stride),
    )

    degrade = config.Degrade
    degrade_settings = DegradeSettings(
        sample_rate=audio.sample_rate,
        frame_size=spectral.frame_size,
        hop=spectral.hop,
        transcoder=degrade.transcoder,
        wsola_window_ms=degrade.wsola_window_ms,
        wsola_tolerance_ms=degrade.wsola_tolerance_ms,
        eq_bands=degrade.eq_bands,
        eq_band_hz=degrade.eq_band_hz,
        mask_band_hz=degrade.mask_band_hz,
        mask_iterations=degrade.mask_iterations,
    )

    match = config.Match
    match_settings = MatchSettings(
        top_k=match.top_k,
        offset_bin=match.offset_bin,
        majority_fraction=match.majority_fraction,
        max_l2_distance=match.max_l2_distance,
        max_hamming=match.max_hamming,
        seg_len=match.seg_len,
        seg_hop=match.seg_hop,
    )

    index = config.Index
    try:
        index_type = IndexType(index.type)
    except ValueError:
        raise InvalidParameterError(
            f"Index.type must be 'ivf' or 'exhaustive', got {index.type!r}"
        ) from None
    index_settings = IndexSettings(
        type=index_type,
        nlist=index.nlist,
        nprobe=index.nprobe,
        seed=index.seed,
        kmeans_iterations=index.kmeans_iterations,
        max_points_per_centroid=index.max_points_per_centroid,
    )

    proposed = config.Proposed
    pca = PcaSettings(dims=proposed.pca_dims, max_samples=proposed.pca_max_samples,
                      min_samples=proposed.pca_min_samples, seed=proposed.pca_seed)
    minhash = MinHashSettings(top_t=config.MinHash.top_t, seed=config.MinHash.seed)

    ev = config.Eval
    eval_settings = EvalSettings(
        query_seconds=ev.query_seconds,
        queries_per_clip=ev.queries_per_clip,
        noise_seg_len=ev.noise_seg_len,
        skip_seg_len=ev.skip_seg_len,
        bench_queries=ev.bench_queries,
        bench_runs=ev.bench_runs,
        false_positive_segments=ev.false_positive_segments,
        temporal_clips=ev.temporal_clips,
    )

    return Settings(pipeline=pipeline, degrade=degrade_settings, match=match_settings,
                    index=index_settings, pca=pca, minhash=minhash, eval=eval_settings,
                    threads=config.threads, config_hash=config_digest(config))

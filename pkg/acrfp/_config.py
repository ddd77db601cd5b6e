from .core import config_loader

__all__ = ("Config", "Section",)

Section = config_loader.Section


class Config(config_loader.Config):
    """
    Default configuration of acrfp.

    ``acrfp config init`` writes these values as JSON; ``--config file.json`` overrides any
    subset of them.
    """

    threads: int = 0
    """
    Worker threads for batch work; 0 means one per available core. Results never depend
    on this value.
    """

    class Audio(Section):
        sample_rate: int = 16000
        min_input_rate: int = 8000
        kaiser_beta: float = 8.6
        taps_per_phase: int = 64

    class Spectral(Section):
        frame_size: int = 512
        hop: int = 256
        mel_bands: int = 64
        mel_f_lo: float = 62.5
        mel_f_hi: float = 8000.0
        bark_bands: int = 32
        bark_f_lo: float = 0.0
        bark_f_hi: float = 8000.0
        log_floor: float = 1e-10

    class Window(Section):
        window_len: int = 64
        """
        Timesteps per fingerprint window (1.024 s at the default hop).
        """

        stride: int = 8

    class Proposed(Section):
        pca_dims: int = 32
        pca_max_samples: int = 500_000
        pca_min_samples: int = 1000
        pca_seed: int = 0

    class MinHash(Section):
        top_t: int = 200
        seed: int = 0

    class Index(Section):
        type: str = "ivf"
        """
        Default index type for ``build-index``: ``ivf`` or ``exhaustive``.
        """

        nlist: int = 0
        """
        IVF cluster count; 0 derives it from the DB size.
        """

        nprobe: int = 0
        seed: int = 0
        kmeans_iterations: int = 25
        max_points_per_centroid: int = 256

    class Match(Section):
        top_k: int = 5
        offset_bin: float = 0.0
        """
        Offset histogram bin in seconds; 0 uses one retained-fingerprint spacing of the DB.
        """

        majority_fraction: float = 0.4
        max_l2_distance: float = 8.0
        """
        Hits of the proposed fingerprint farther than this do not vote; 0 disables the gate.
        """

        max_hamming: int = 64
        seg_len: float = 1.25
        seg_hop: float = 0.0

    class Degrade(Section):
        transcoder: str = "ffmpeg"
        wsola_window_ms: float = 30.0
        wsola_tolerance_ms: float = 10.0
        eq_bands: int = 5
        eq_band_hz: float = 400.0
        mask_band_hz: float = 40.0
        mask_iterations: int = 16

    class Eval(Section):
        query_seconds: float = 8.0
        queries_per_clip: int = 1
        noise_seg_len: float = 1.0
        skip_seg_len: float = 1.25
        bench_queries: int = 1000
        bench_runs: int = 5
        false_positive_segments: int = 100
        temporal_clips: int = 10

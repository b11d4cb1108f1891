"""End-to-end command-line behavior, run in-process via main()."""

import numpy as np
import pytest

from magdenoise import (
    AmfConfig,
    DenoiseConfig,
    EnhanceConfig,
    NoiseSpec,
    amf,
    denoise,
    inject,
    load_pgm,
    mse,
    psnr,
    save_pgm,
    smf,
)
from magdenoise.cli import main
from magdenoise.phantom import make_phantom

from helpers import random_image


@pytest.fixture()
def clean_path(tmp_path):
    path = tmp_path / "clean.pgm"
    save_pgm(path, make_phantom(48, 48))
    return path


@pytest.fixture()
def noisy_path(tmp_path, clean_path):
    path = tmp_path / "noisy.pgm"
    noisy, _ = inject(load_pgm(clean_path), NoiseSpec(density=0.4, seed=5))
    save_pgm(path, noisy)
    return path


class TestInject:
    def test_density_zero_copies_raster(self, tmp_path, clean_path, capsys):
        out = tmp_path / "out.pgm"
        assert main(["inject", str(clean_path), str(out), "--density", "0", "--seed", "3"]) == 0
        assert load_pgm(out) == load_pgm(clean_path)
        assert "realized corruption fraction: 0.000000" in capsys.readouterr().out

    def test_same_seed_bytes_identical(self, tmp_path, clean_path):
        a = tmp_path / "a.pgm"
        b = tmp_path / "b.pgm"
        for out in (a, b):
            assert main(["inject", str(clean_path), str(out), "--density", "0.5", "--seed", "9"]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_matches_library_inject(self, tmp_path, clean_path, capsys):
        out = tmp_path / "out.pgm"
        mask_out = tmp_path / "mask.pgm"
        rc = main(
            ["inject", str(clean_path), str(out), "--density", "0.3", "--seed", "12",
             "--mask-out", str(mask_out)]
        )
        assert rc == 0
        noisy, mask = inject(load_pgm(clean_path), NoiseSpec(density=0.3, seed=12))
        assert load_pgm(out) == noisy
        mask_img = load_pgm(mask_out)
        assert set(np.unique(mask_img.pixels).tolist()) <= {0, 255}
        assert np.array_equal(mask_img.pixels == 255, mask.flags)
        printed = float(capsys.readouterr().out.split("realized corruption fraction:")[1].split()[0])
        assert printed == pytest.approx(mask.fraction, abs=1e-6)

    def test_bad_density_fails(self, tmp_path, clean_path, capsys):
        out = tmp_path / "out.pgm"
        assert main(["inject", str(clean_path), str(out), "--density", "1.5"]) == 1
        assert "error:" in capsys.readouterr().err

    def test_missing_input_fails(self, tmp_path, capsys):
        rc = main(["inject", str(tmp_path / "nope.pgm"), str(tmp_path / "o.pgm"), "--density", "0.1"])
        assert rc == 1
        assert "error:" in capsys.readouterr().err


class TestDenoise:
    def test_clean_input_is_fixed_point(self, tmp_path, clean_path, capsys):
        out = tmp_path / "out.pgm"
        rc = main(["denoise", str(clean_path), str(out), "--reference", str(clean_path)])
        assert rc == 0
        assert load_pgm(out) == load_pgm(clean_path)
        assert "psnr_db inf" in capsys.readouterr().out

    def test_matches_library_defaults(self, tmp_path, noisy_path):
        out = tmp_path / "out.pgm"
        assert main(["denoise", str(noisy_path), str(out)]) == 0
        expected, _ = denoise(load_pgm(noisy_path))
        assert load_pgm(out) == expected

    def test_deterministic(self, tmp_path, noisy_path):
        a = tmp_path / "a.pgm"
        b = tmp_path / "b.pgm"
        for out in (a, b):
            assert main(["denoise", str(noisy_path), str(out)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_filter_smf_wiring(self, tmp_path, noisy_path):
        out = tmp_path / "out.pgm"
        assert main(["denoise", str(noisy_path), str(out), "--filter", "smf"]) == 0
        assert load_pgm(out) == smf(load_pgm(noisy_path))

    def test_filter_none_wiring(self, tmp_path, noisy_path):
        out = tmp_path / "out.pgm"
        assert main(["denoise", str(noisy_path), str(out), "--filter", "none"]) == 0
        assert load_pgm(out) == load_pgm(noisy_path)

    def test_scan_flag_wiring(self, tmp_path, noisy_path):
        noisy = load_pgm(noisy_path)
        for scan in ("progressive", "snapshot"):
            out = tmp_path / f"{scan}.pgm"
            assert main(["denoise", str(noisy_path), str(out), "--scan", scan]) == 0
            expected, _ = denoise(noisy, DenoiseConfig(scan=scan))
            assert load_pgm(out) == expected

    def test_enhance_flag_wiring(self, tmp_path, noisy_path):
        noisy = load_pgm(noisy_path)
        for mode in ("auto", "on", "off"):
            out = tmp_path / f"{mode}.pgm"
            assert main(["denoise", str(noisy_path), str(out), "--enhance", mode]) == 0
            expected, _ = denoise(noisy, DenoiseConfig(enhance=EnhanceConfig(mode=mode)))
            assert load_pgm(out) == expected

    def test_max_window_wiring(self, tmp_path, noisy_path):
        out = tmp_path / "out.pgm"
        rc = main(["denoise", str(noisy_path), str(out), "--filter", "amf", "--max-window", "3"])
        assert rc == 0
        assert load_pgm(out) == amf(load_pgm(noisy_path), AmfConfig(max_window=3))

    def test_mag_threshold_wiring(self, tmp_path, noisy_path):
        # an unreachable threshold flags nothing; with enhancement off the
        # output must be byte-identical to the input
        out = tmp_path / "out.pgm"
        rc = main(
            ["denoise", str(noisy_path), str(out), "--mag-threshold", "100000",
             "--enhance", "off"]
        )
        assert rc == 0
        assert load_pgm(out) == load_pgm(noisy_path)

    def test_sigma_threshold_wiring(self, tmp_path, noisy_path, capsys):
        out = tmp_path / "out.pgm"
        assert main(["denoise", str(noisy_path), str(out), "--sigma-threshold", "0"]) == 0
        assert "enhancement on" in capsys.readouterr().out
        noisy = load_pgm(noisy_path)
        expected, _ = denoise(noisy, DenoiseConfig(enhance=EnhanceConfig(sigma_threshold=0.0)))
        assert load_pgm(out) == expected

    def test_reference_dimension_mismatch_fails(self, tmp_path, noisy_path, capsys):
        bad_ref = tmp_path / "ref.pgm"
        save_pgm(bad_ref, random_image(np.random.default_rng(1), 10, 10))
        out = tmp_path / "out.pgm"
        rc = main(["denoise", str(noisy_path), str(out), "--reference", str(bad_ref)])
        assert rc == 1
        assert "dimensions differ" in capsys.readouterr().err


class TestPsnrCommand:
    def test_identical_files(self, clean_path, capsys):
        assert main(["psnr", str(clean_path), str(clean_path)]) == 0
        out = capsys.readouterr().out
        assert "mse 0.0000" in out
        assert "psnr_db inf" in out

    def test_matches_library(self, clean_path, noisy_path, capsys):
        assert main(["psnr", str(clean_path), str(noisy_path)]) == 0
        out = capsys.readouterr().out
        a, b = load_pgm(clean_path), load_pgm(noisy_path)
        assert f"mse {mse(a, b):.4f}" in out
        assert f"psnr_db {psnr(a, b):.4f}" in out


class TestSweep:
    def test_single_passthrough_row(self, tmp_path, clean_path, capsys):
        csv_path = tmp_path / "bench.csv"
        rc = main(
            ["sweep", str(clean_path), "--csv", str(csv_path), "--densities", "0.1",
             "--filters", "none", "--seed", "7", "--no-plot"]
        )
        assert rc == 0
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "filter,density,mse,psnr_db,precision,recall"
        assert len(lines) == 2
        clean = load_pgm(clean_path)
        noisy, _ = inject(clean, NoiseSpec(density=0.1, seed=7))
        assert lines[1] == f"none,0.1,{mse(clean, noisy):.4f},{psnr(clean, noisy):.4f},,"

    def test_row_order_and_score_cells(self, tmp_path, clean_path):
        csv_path = tmp_path / "bench.csv"
        rc = main(
            ["sweep", str(clean_path), "--csv", str(csv_path), "--densities", "0.2,0.6",
             "--filters", "proposed,smf,none", "--no-plot"]
        )
        assert rc == 0
        lines = csv_path.read_text().splitlines()[1:]
        assert [line.split(",")[0] for line in lines] == ["proposed", "smf", "none"] * 2
        assert [line.split(",")[1] for line in lines] == ["0.2"] * 3 + ["0.6"] * 3
        for line in lines:
            cells = line.split(",")
            if cells[0] == "proposed":
                assert cells[4] and cells[5]
            else:
                assert cells[4] == "" and cells[5] == ""

    def test_reproducible_csv_bytes(self, tmp_path, clean_path):
        args_tail = ["--densities", "0.3,0.8", "--filters", "proposed,none", "--seed", "4", "--no-plot"]
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        for path in (a, b):
            assert main(["sweep", str(clean_path), "--csv", str(path), *args_tail]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_plot_written_alongside_csv(self, tmp_path, clean_path):
        csv_path = tmp_path / "bench.csv"
        rc = main(
            ["sweep", str(clean_path), "--csv", str(csv_path), "--densities", "0.2,0.5",
             "--filters", "none,smf"]
        )
        assert rc == 0
        png = tmp_path / "bench.png"
        assert png.exists()
        assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    def test_explicit_plot_path(self, tmp_path, clean_path):
        csv_path = tmp_path / "bench.csv"
        fig_path = tmp_path / "figure.png"
        rc = main(
            ["sweep", str(clean_path), "--csv", str(csv_path), "--densities", "0.3",
             "--filters", "none", "--plot", str(fig_path)]
        )
        assert rc == 0
        assert fig_path.exists()

    def test_echoes_sigma_per_density(self, tmp_path, clean_path, capsys):
        csv_path = tmp_path / "bench.csv"
        rc = main(
            ["sweep", str(clean_path), "--csv", str(csv_path), "--densities", "0.2,0.7",
             "--filters", "none", "--no-plot"]
        )
        assert rc == 0
        out = capsys.readouterr().out
        echo_lines = [line for line in out.splitlines() if " sigma " in line]
        assert len(echo_lines) == 2
        assert echo_lines[0].startswith("density 0.2 ")
        assert echo_lines[1].startswith("density 0.7 ")

    def test_raw_psnr_strictly_decreasing_in_density(self, tmp_path, clean_path):
        # the "none" column must fall monotonically as corruption grows
        csv_path = tmp_path / "bench.csv"
        densities = ",".join(f"{0.1 * k:g}" for k in range(1, 10))
        rc = main(
            ["sweep", str(clean_path), "--csv", str(csv_path), "--densities", densities,
             "--filters", "none", "--no-plot"]
        )
        assert rc == 0
        values = [float(line.split(",")[3]) for line in csv_path.read_text().splitlines()[1:]]
        assert len(values) == 9
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_bad_filter_name_fails(self, tmp_path, clean_path, capsys):
        rc = main(
            ["sweep", str(clean_path), "--csv", str(tmp_path / "x.csv"),
             "--filters", "proposed,bogus", "--no-plot"]
        )
        assert rc == 1
        assert "unknown filter" in capsys.readouterr().err

    def test_bad_density_fails(self, tmp_path, clean_path, capsys):
        rc = main(
            ["sweep", str(clean_path), "--csv", str(tmp_path / "x.csv"),
             "--densities", "0.2,0", "--no-plot"]
        )
        assert rc == 1
        assert "density" in capsys.readouterr().err

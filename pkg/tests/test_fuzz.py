"""Cross-validation harness plumbing."""

from __future__ import annotations

from gwis import FuzzConfig, cross_validate, parse_graph
from gwis.fuzz import _dump_reproducer
from gwis.generate import make_instance


class TestModes:
    def test_general_mode(self):
        report = cross_validate(FuzzConfig(count=40, n_max=8, seed=21))
        assert report.ok and report.instances == 40
        assert report.stats["unique"] + report.stats.get("not_unique", 0) == sum(
            1 for _ in range(40)
        )
        assert report.stats["alpha_sets_checked"] >= 40

    def test_tree_mode(self):
        report = cross_validate(FuzzConfig(count=25, n_min=1, n_max=10, seed=22, mode="trees"))
        assert report.ok

    def test_reduction_mode(self):
        cfg = FuzzConfig(
            count=20, n_min=0, n_max=6, seed=23, mode="reductions",
            denominators=(1,), weight_max=2,
        )
        report = cross_validate(cfg)
        assert report.ok and report.stats["pairs"] >= 20

    def test_perturbation_mode(self):
        cfg = FuzzConfig(count=15, n_max=8, seed=24, mode="perturbation", trials=3)
        report = cross_validate(cfg)
        assert report.ok
        assert report.stats["trials"] == 3 * report.stats["unique"]


class TestParallelism:
    def test_two_jobs_match_serial(self):
        cfg = FuzzConfig(count=24, n_max=8, seed=25)
        serial = cross_validate(cfg, jobs=1)
        parallel = cross_validate(cfg, jobs=2)
        assert serial.stats == parallel.stats
        assert serial.disagreements == parallel.disagreements


class TestReproducers:
    def test_dump_writes_parseable_document(self, tmp_path):
        cfg = FuzzConfig(count=1, n_max=6, seed=26)
        g = make_instance(cfg, 0)
        path = _dump_reproducer(tmp_path, cfg, 0, g, "equivalence", "demo detail")
        text = (tmp_path / path.split("/")[-1]).read_text(encoding="utf-8")
        doc = parse_graph(text)
        assert doc.graph == g
        assert "demo detail" in text

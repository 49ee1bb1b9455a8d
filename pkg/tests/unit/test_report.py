"""
Tests for CSV, JSON and SVG output.
"""

import json
import xml.etree.ElementTree as ET

import pytest

from weakly_directed_walks.analysis.zeros import boundary_curve, gk_roots
from weakly_directed_walks.lattice.models import Walk
from weakly_directed_walks.report.emitters import (
    counts_frame,
    metadata,
    to_csv,
    to_json,
    write_text,
    zeros_frame,
)
from weakly_directed_walks.report.svg import (
    PIXELS_PER_UNIT,
    path_data,
    to_string,
    walk_svg,
    write_svg,
    zeros_svg,
)

SVG = "{http://www.w3.org/2000/svg}"


def parse(element: ET.Element) -> ET.Element:
    return ET.fromstring(to_string(element))


class TestMetadata:
    """JSON header block."""

    def test_fields(self):
        """Tool, version, command and extras."""
        meta = metadata("mu", truncation=120)
        assert meta["tool"] == "weakly-directed-walks"
        assert meta["command"] == "mu"
        assert meta["truncation"] == 120
        assert "timestamp" in meta

    def test_without_timestamp(self):
        """The timestamp can be left out for reproducible output."""
        assert "timestamp" not in metadata("mu", timestamp=False)
        assert metadata("mu", timestamp=False) == metadata("mu", timestamp=False)

    def test_to_json(self):
        """Payload keys sit next to the metadata block."""
        data = json.loads(to_json({"rows": [1]}, {"command": "x"}))
        assert data == {"metadata": {"command": "x"}, "rows": [1]}


class TestCsv:
    """Fixed CSV headers."""

    def test_counts_header(self):
        """Columns are reordered to the counts header."""
        rows = [{"match": True, "oracle": 3, "coefficient": 3, "model": "horizontal",
                 "class": "W", "n": 2}]
        assert to_csv(counts_frame(rows)) == (
            "n,class,model,coefficient,oracle,match\n2,W,horizontal,3,3,True\n"
        )

    def test_zeros_header(self):
        """Roots use k,re,im,residual."""
        text = to_csv(zeros_frame(gk_roots(1).rows()))
        lines = text.splitlines()
        assert lines[0] == "k,re,im,residual"
        assert len(lines) == 1 + 4

    def test_empty_frame(self):
        """No rows still writes the header."""
        assert to_csv(counts_frame([])) == "n,class,model,coefficient,oracle,match\n"

    def test_write_text(self, tmp_path):
        """Parent directories are created; no path means no file."""
        target = tmp_path / "out" / "a.csv"
        write_text("x\n", target)
        assert target.read_text() == "x\n"
        write_text("ignored", None)


class TestWalkSvg:
    """Walk drawings."""

    def test_scale(self):
        """Ten pixels per lattice unit plus a one-unit margin."""
        root = parse(walk_svg(Walk("EEN")))
        assert PIXELS_PER_UNIT == 10
        assert root.get("width") == "40px"
        assert root.get("height") == "30px"

    def test_single_stroked_path(self):
        """One unfilled path through every vertex."""
        root = parse(walk_svg(Walk("EEN")))
        paths = root.findall(f"{SVG}path")
        assert len(paths) == 1
        assert paths[0].get("fill") == "none"
        assert paths[0].get("stroke") == "black"
        assert paths[0].get("d") == "M10 20L20 20L30 20L30 10"

    def test_origin_marker(self):
        """A circle marks the origin."""
        root = parse(walk_svg(Walk("NW")))
        circles = root.findall(f"{SVG}circle")
        assert len(circles) == 1
        assert (circles[0].get("cx"), circles[0].get("cy")) == ("20", "20")

    def test_empty_walk(self):
        """The empty walk is just the origin marker."""
        root = parse(walk_svg(Walk("")))
        assert root.findall(f"{SVG}path") == []
        assert len(root.findall(f"{SVG}circle")) == 1

    def test_path_data(self):
        """Move then line commands."""
        assert path_data([(0, 0), (1.5, 2)]) == "M0 0L1.5 2"

    def test_write_svg(self, tmp_path):
        """Files are written with parent directories."""
        target = tmp_path / "svg" / "walk.svg"
        write_svg(walk_svg(Walk("N")), target)
        assert target.read_text().startswith("<svg")


class TestZerosSvg:
    """Zero portraits."""

    def test_groups(self):
        """Axes, boundary and one circle per root."""
        roots = gk_roots(3)
        root = parse(zeros_svg(roots, boundary_curve(50)))
        groups = {g.get("id"): g for g in root.findall(f"{SVG}g")}
        assert set(groups) == {"axes", "boundary", "zeros-k3"}
        assert len(groups["zeros-k3"].findall(f"{SVG}circle")) == roots.degree
        # two curve halves and two real segments
        assert len(groups["boundary"].findall(f"{SVG}path")) == 4

    @pytest.mark.parametrize("scale", [100, 200])
    def test_viewport(self, scale):
        """The viewport covers [-2.6, 1.2] x [-1.2, 1.2]."""
        root = parse(zeros_svg(gk_roots(1), boundary_curve(10), scale=scale))
        assert float(root.get("width").removesuffix("px")) == pytest.approx(3.8 * scale)
        assert float(root.get("height").removesuffix("px")) == pytest.approx(2.4 * scale)

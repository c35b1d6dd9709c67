"""Python access to the proportional-edge PCD domination library."""

import json

from ._pcd import GeometryError, IoError, __version__, gamma, law, p_r, tr_vertices, simulate_json

__all__ = ["GeometryError", "IoError", "__version__", "gamma", "law", "p_r", "simulate", "tr_vertices"]


def simulate(r="3/2", M="centroid", n=(10, 20, 30, 50, 100), replicates=1000, seed=20240101, d=2,
             mode="single", anchors=10, threads=0):
    """Monte-Carlo distribution of the domination number, as the report dict."""
    config = {"r": str(r), "M": M, "n": list(n), "replicates": replicates, "seed": seed, "d": d, "mode": mode}
    if mode == "multi":
        config["anchors"] = anchors
    return json.loads(simulate_json(json.dumps(config), threads))

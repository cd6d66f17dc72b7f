"""Input files and argument lists exercising every CLI subcommand."""

import io
import json

from turanlab.cli import run

FILES = {
    "fano.hgr": "3 7 7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n",
    "fano_minus.hgr": "3 7 6\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n",
    "t3.hgr": "3 5 3\n0 1 2\n0 1 3\n2 3 4\n",
    "k4.hgr": "2 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n",
    "c5.hgr": "2 5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n",
    "k2.hgr": "2 2 1\n0 1\n",
    "p3.json": json.dumps({"r": 2, "n": 3, "edges": [[0, 1], [1, 2]], "mu": ["1/3", "1/3", "1/3"]}),
    "spec.json": json.dumps({"base": "fano.hgr", "assignment": [0, 1, 2, 3, 4, 5, 6]}),
}


def write_inputs(root):
    for name, text in FILES.items():
        (root / name).write_text(text)
    return root


def matrix(root):
    p = lambda name: str(root / name)  # noqa: E731
    return [
        ["steiner", "build", "-m", "7", "-r", "3", "--no-cache", "-o", p("out_fano.hgr")],
        ["steiner", "verify", "-i", p("fano.hgr")],
        ["steiner", "verify", "-i", p("fano_minus.hgr")],
        ["lambda", "eval", "-i", p("k4.hgr")],
        ["lambda", "residual", "-i", p("p3.json")],
        ["lambda", "max", "-i", p("k4.hgr"), "--restarts", "5"],
        ["lambda", "balanced", "-i", p("fano.hgr"), "--restarts", "5"],
        ["symmetrize", "-i", p("p3.json"), "-o", p("out_sym.json"), "--trace", p("out_trace.json")],
        ["distance", "-i", p("fano_minus.hgr"), "--base", p("fano.hgr")],
        ["distance", "-i", p("c5.hgr"), "--base", p("k2.hgr"), "--mode", "heuristic"],
        ["distance", "-i", p("c5.hgr"), "--base", p("k2.hgr"), "--transfer"],
        ["classify", "-i", p("fano_minus.hgr"), "--spec", p("spec.json")],
        ["search", "--n", "6", "--r", "3", "--pattern", "sigma"],
        ["search", "--n", "6", "--r", "2", "--pattern", "clique", "--parallel", "--deterministic", "--threads", "2"],
        ["verify", "-i", p("t3.hgr"), "--pattern", "triangle"],
        ["verify", "-i", p("fano.hgr"), "--pattern", "sigma"],
        ["constants", "-m", "11", "-r", "5"],
    ]


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_matrix(root, seed="0"):
    return [invoke(argv + ["--json", "--seed", seed]) for argv in matrix(root)]

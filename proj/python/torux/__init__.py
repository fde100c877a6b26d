"""Exact tools for hyperbolic toral automorphisms."""

import json

from torux._core import (
    ToruxError,
    count_classes,
    cylinder_measure,
    doubling_code,
    doubling_decode,
    gl_conjugate,
    is_hyperbolic,
    kappa,
    period,
)
from torux import _core


def classify(matrix):
    return json.loads(_core.classify_json(matrix))


def conjugate(a, b):
    return json.loads(_core.conjugate_json(a, b))


def entropy(matrix):
    return json.loads(_core.entropy_json(matrix))


def form(matrix):
    return json.loads(_core.form_json(matrix))


def graph(matrix):
    return json.loads(_core.graph_json(matrix))


def premp(matrix, list=None, edge_type=False):
    return json.loads(_core.premp_json(matrix, list, edge_type))


def mix(matrix, grid=512, iters=3):
    return json.loads(_core.mix_json(matrix, grid, iters))

#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Planar Turan numbers of the wheel-like patterns H_k and F_k: plane
graphs, pattern detectors, triangular blocks, triangulation enumeration,
extremal constructions and the statement harness.
"""
from .version import ptr_version as __version__

from .errors import PlanTuranError
from .plane import (Face, PlaneGraph, add_chord, add_edge, build, delete_edge,
                    delete_edges, delete_vertex, faces, from_faces, link_graph,
                    mirror, profile, reroot)
from .detectors import Pattern, is_fk_free, is_hk_free, max_matching
from .blocks import (block_inequalities_fan, block_inequalities_h3,
                     improvement_block, triangular_blocks)
from .enumeration import (brute_force_oracle, canonical_code, near_triangulations,
                          sample_triangulations, triangulations)
from .constructions import fan_family, h3_family, named
from .verify import Certificate, max_edges, run_statement

__all__ = ["version", "errors", "plane", "codec", "detectors", "blocks",
           "enumeration", "constructions", "verify", "cli", "config", "log",
           "parallel", "tools"]

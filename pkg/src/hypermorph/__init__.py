"""Morphological filtering of binary images on grid graphs and
4-uniform block hypergraphs.

The operator algebra lives in :mod:`hypermorph.hypergraph` (elementary
cross-operators) and :mod:`hypermorph.morphology` (dilations, erosions,
openings, closings, granulometries, alternating filters).
:mod:`hypermorph.grid` converts binary images to grid-structured
hypergraphs and back, :mod:`hypermorph.denoising` adds the noise model,
error metric, median baseline and sweep machinery, and
:mod:`hypermorph.pnm` reads and writes netpbm images.
"""

from .hypergraph import (
    ClosednessError,
    DimensionMismatch,
    EdgeSet,
    Hypergraph,
    SubHypergraph,
    VertexSet,
    complement_edges,
    complement_vertices,
    edge_to_vertex_dilate,
    edge_to_vertex_erode,
    is_subhypergraph,
    vertex_to_edge_dilate,
    vertex_to_edge_erode,
)
from .morphology import (
    FilterFamily,
    OperatorScale,
    asf,
    edge_close1,
    edge_dilate,
    edge_erode,
    edge_halfclose,
    edge_halfopen,
    edge_open1,
    granulometry_close,
    granulometry_open,
    pair_close1,
    pair_dilate,
    pair_erode,
    pair_halfclose,
    pair_halfopen,
    pair_open1,
    vertex_close1,
    vertex_dilate,
    vertex_erode,
    vertex_halfclose,
    vertex_halfopen,
    vertex_open1,
)
from .grid import (
    BinaryImage,
    GridHypergraphSpec,
    GridKind,
    build_grid_hypergraph,
    grid_for_image,
    image_to_subhypergraph,
    subhypergraph_to_image,
)
from .denoising import (
    NoiseSpec,
    SweepEntry,
    SweepReport,
    add_salt_pepper,
    asf_denoise,
    blob_pattern,
    median_filter,
    mse_percent,
    run_sweep,
)
from .pnm import (
    PnmBadMagic,
    PnmDimensionError,
    PnmParseError,
    PnmTruncated,
    read_image,
    write_image,
)

__version__ = "0.1.0"

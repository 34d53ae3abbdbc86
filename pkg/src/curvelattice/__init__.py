"""Exact filtered lattice homology of isolated curve singularities.

Public API overview:

* semigroups — :func:`from_numerical_generators`, :func:`explicit_semigroup`,
  :func:`wedge`, :func:`delta`, :func:`is_gorenstein`
* Hilbert/weight functions and series — :func:`hilbert_table`,
  :func:`weight_table`, :func:`poincare_P`, :func:`motivic_pm`,
  :func:`hilbert_from_alexander`
* lattice homology — :func:`lattice_homology`, :func:`graded_root`,
  :func:`hat_homology`, :func:`euler_characteristic`
* spectral pages and series — :class:`FilteredPages`, :func:`pe_series`,
  :func:`bold_pe1`, :func:`hfl_ranks`, :func:`k_table`
* the example corpus — :func:`corpus`, :func:`by_name`
"""

from .curves import (
    by_name,
    corpus,
    cusp23,
    cusp34,
    double_cusp34,
    gap_block,
    ordinary_double,
    ordinary_triple,
    sg378,
    sg457,
    smooth,
)
from .hilbert import (
    HilbertTable,
    WeightTable,
    hilbert_from_alexander,
    hilbert_table,
    motivic_coefficient,
    motivic_pm,
    poincare_P,
    weight_table,
)
from .homology import ChainComplex, HomologyBasis, HomologyGroup, homology
from .lattice import Cube, Rectangle, faces, make_cube
from .lattice_homology import (
    GradedRoot,
    HatHomology,
    LatticeHomology,
    SnComplex,
    ZUModule,
    euler_characteristic,
    graded_root,
    hat_homology,
    kunneth_wedge,
    lattice_homology,
    part_reduced_module,
    working_rectangle,
)
from .semigroup import (
    ValueSemigroup,
    delta,
    explicit_semigroup,
    from_numerical_generators,
    is_gorenstein,
    validate_saturation,
    wedge,
)
from .series import MultiLaurent, RationalSeries, parse_poly, symmetry_check
from .spectral import (
    FilteredPages,
    bold_pe1,
    check_local_concentration,
    e1_from_locals,
    hfl_ranks,
    k_table,
    local_homology,
    pe_series,
    y_chains_r1,
    y_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "ChainComplex",
    "Cube",
    "FilteredPages",
    "GradedRoot",
    "HatHomology",
    "HilbertTable",
    "HomologyBasis",
    "HomologyGroup",
    "LatticeHomology",
    "MultiLaurent",
    "RationalSeries",
    "Rectangle",
    "SnComplex",
    "ValueSemigroup",
    "WeightTable",
    "ZUModule",
    "bold_pe1",
    "by_name",
    "check_local_concentration",
    "corpus",
    "cusp23",
    "cusp34",
    "double_cusp34",
    "gap_block",
    "ordinary_double",
    "ordinary_triple",
    "sg378",
    "sg457",
    "smooth",
    "delta",
    "e1_from_locals",
    "euler_characteristic",
    "explicit_semigroup",
    "faces",
    "from_numerical_generators",
    "graded_root",
    "hat_homology",
    "hfl_ranks",
    "hilbert_from_alexander",
    "hilbert_table",
    "homology",
    "is_gorenstein",
    "k_table",
    "kunneth_wedge",
    "lattice_homology",
    "local_homology",
    "make_cube",
    "motivic_coefficient",
    "motivic_pm",
    "parse_poly",
    "part_reduced_module",
    "pe_series",
    "poincare_P",
    "symmetry_check",
    "validate_saturation",
    "wedge",
    "weight_table",
    "working_rectangle",
    "y_chains_r1",
    "y_matrix",
]

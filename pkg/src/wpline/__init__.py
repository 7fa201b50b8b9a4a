"""Exact computations around tubes, expansions and weighted projective lines.

Subpackages by theme:

* :mod:`wpline.lgroup` - the rank-1 grading group and its normal forms;
* :mod:`wpline.tubecat` - tube categories with two independent Hom/Ext
  computations;
* :mod:`wpline.expansion` - the object-level expansion and contraction
  maps between tubes of adjacent rank;
* :mod:`wpline.extquiver` - valued Ext-quivers and the vertex/arrow
  rewrites;
* :mod:`wpline.gradedmod` - windowed graded modules and the explicit
  degree-wise weight-change functors;
* :mod:`wpline.planner` - weight-reduction chains;
* :mod:`wpline.cli` - the batch command line front end.
"""

from .expansion import (
    ExpansionContext,
    LocalSequence,
    coexpand,
    connecting_sequence,
    contract,
    expand,
    local_sequence,
    perp_membership,
)
from .extquiver import ValuedQuiver, quiver_of, rewrite_contract, rewrite_expand
from .fields import DEFAULT_FIELD, PrimeField, RationalField
from .gradedmod import (
    DegreeWindow,
    WeightedLineData,
    WindowedModule,
    apply_F,
    apply_F_lambda,
    apply_F_rho,
    hom_dim_mod,
    structure_module,
)
from .lgroup import LElement, normalize, phi
from .planner import ReductionPlan, apply_step, reduction_plan
from .tubecat import (
    NilpRep,
    PointDescriptor,
    TubeIndec,
    TubeObject,
    ext1_dim,
    hom_dim,
    simples_of,
    tau,
    to_nilprep,
)

__version__ = "0.1.0"

"""qcalc: a calculus of categories enriched in a small quantaloid.

Finite lattices and quantaloids, enriched categories, functors and
distributors with their residuation calculus, enumerated presheaf and
copresheaf categories with Yoneda machinery and both lax-idempotent
monads, Cauchy completion and Morita equivalence, and the completeness
notions up to Morita equivalence with their characterizations.
"""

from .errors import (
    AntisymmetryViolation,
    DomainMismatch,
    Mismatch,
    NotALattice,
    NotComposable,
    NotLeftAdjoint,
    NotMCocomplete,
    ParseError,
    QcalcError,
    SearchSpaceExceeded,
    TypeMismatch,
    UnknownElement,
    ValidationError,
    search_cap,
)
from .lattice import FiniteLattice, build_lattice, join, leq, meet, reverse
from .quantaloid import (
    Arrow,
    Quantaloid,
    compose,
    is_map,
    is_right_adjoint_arrow,
    left_imp,
    one_object,
    opposite,
    right_imp,
    star,
    validate_quantaloid,
)
from .qcat import (
    QCategory,
    QFunctor,
    compose_functors,
    functor_leq,
    functors_adjoint,
    identity_functor,
    is_skeletal,
    opposite_category,
    skeleton,
    underlying_preorder,
    validate_category,
    validate_functor,
)
from .qdist import (
    QDistributor,
    adjoint_pair,
    cograph,
    d_compose,
    d_is_left_adjoint,
    d_is_right_adjoint,
    d_join,
    d_left_imp,
    d_leq,
    d_meet,
    d_op,
    d_right_imp,
    d_star,
    graph,
    identity_dist,
    left_adjoint_candidate,
    search_right_adjoints,
    validate_distributor,
)
from .presheaf import (
    ImageFunctors,
    MonadComponents,
    PresheafCategory,
    check_yoneda_lemma,
    co_yoneda,
    copresheaf_category,
    cotensor,
    dist_images,
    enumerate_copresheaves,
    enumerate_presheaves,
    find_inf_functor,
    find_sup_functor,
    functor_images,
    inf_in_PdA,
    is_cocomplete,
    is_complete,
    is_cotensored,
    is_tensored,
    kz_check,
    monad_components,
    presheaf_category,
    sup_in_PA,
    tensor,
    yoneda,
)
from .morita import (
    cauchy_completion,
    category_isomorphism,
    converges,
    is_cauchy_complete,
    left_adjoint_presheaves,
    morita_equivalent,
)
from .mcomplete import (
    MoritaReport,
    check_lemma_Th,
    free_extension,
    is_m_cocomplete,
    is_m_cocontinuous,
    is_m_complete,
    is_m_conically_cocomplete,
    is_m_conically_complete,
    is_m_continuous,
    is_m_cotensored,
    is_m_tensored,
    is_pdag_algebra_hom,
    is_phat_algebra_hom,
    ub_lb,
)
from .realline import (
    DEFAULT_SAMPLES,
    NEG_INF,
    POS_INF,
    ZERO,
    ExtendedRational,
    RealQuantale,
    example2_verify,
    r_compose,
    r_imp,
    r_join,
    r_leq,
    r_meet,
)
from .workspace import Workspace, parse_workspace, serialize_workspace
from .corpus import CorpusSpec, generate

__version__ = "0.1.0"

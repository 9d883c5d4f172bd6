"""Affine type A crystals on Fock spaces: Kashiwara operators on charged
multipartitions, Uglov sets, crystal isomorphisms between multicharges, Hu's
map, the embeddings iota_k and restriction split counts for type G(l,l,n)."""

from .charges import (
    GeneratorWord,
    act_sigma,
    act_tau,
    act_tau_inverse,
    act_y,
    is_flotw,
    is_very_dominant,
    same_orbit,
    to_fundamental,
)
from .crystal import (
    CrystalGraph,
    crystal_graph,
    e_op,
    f_op,
    good_addable,
    good_removable,
    hw_reduce,
    is_uglov,
    precedes,
    reduce_word,
    signature_word,
    uglov_set,
)
from .errors import (
    CrystalError,
    InvalidLevelError,
    InvalidNodeError,
    NotApplicableError,
    NotUglovError,
    OrbitMismatchError,
    ParseError,
    UndefinedStepError,
)
from .iso import extract_path, psi, replay, tau_shortcut
from .maps import (
    canonical_charge,
    hu_map,
    iota,
    is_divided_bipartition,
    is_in_iota_image,
    r_value,
    split_count,
)
from .multipartition import (
    Multicharge,
    Multipartition,
    Node,
    Partition,
    addable_nodes,
    content,
    is_e_regular,
    removable_nodes,
    residue,
)

__version__ = "0.1.0"

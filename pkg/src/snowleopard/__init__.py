"""Snow leopard permutations, their threads, and the bijections around them."""

from .perm import (
    ANTI,
    EMPTY,
    Perm,
    complement,
    direct_sum,
    format_perm,
    induced_even,
    induced_odd,
    inverse,
    is_alternating,
    is_doubly_alternating,
    is_involution,
    length,
    parse_perm,
    preserves_parity,
    skew_sum,
)
from .patterns import (
    VINCULAR_BY_NAME,
    VincularPattern,
    avoids_3412,
    contains_vincular,
    is_anti_baxter,
    is_reduced_baxter,
)
from .baxter import (
    SlpDecomposition,
    anti_of,
    block_decompose,
    catalan_number,
    compatible,
    doubly_alternating_baxter,
    enumerate_slp,
    interleave,
    is_complete_baxter,
    is_slp,
    is_slp_oracle,
    reduce,
    slp_decompose,
    snow_leopard_oracle_set,
)
from .threads import (
    EntanglementGraph,
    ThreadSets,
    eligible_connectors,
    entangled,
    entangled_partners,
    entanglement_graph,
    even_decompositions,
    even_threads,
    is_even_thread,
    is_odd_thread,
    leftmost_decomposition,
    odd_decompose,
    odd_threads,
    thread_sets,
)
from .catalan import (
    count_neen_factors,
    count_neen_formula,
    decompose_enne,
    decompose_neen,
    enne_to_even_thread,
    enumerate_enne,
    enumerate_neen,
    even_thread_to_enne,
    is_enne,
    is_neen,
    neen_to_odd_thread,
    odd_thread_to_neen,
    reverse_path,
)
from .motzkin import (
    decompose_peakless,
    enumerate_peakless,
    is_janus_thread,
    is_motzkin_word,
    is_peakless,
    janus_decompose,
    janus_threads,
    janus_to_peakless,
    janus_to_peakless_direct,
    motzkin_number,
    peakless_count,
)
from .entangle import (
    ConjectureReport,
    conjecture_check,
    down_layered,
    involutions_avoiding_3412,
    is_motzkin_product,
    layered_even_partners,
    layered_odd_partners,
    up_layered,
)
from .aztec import (
    DominoTiling,
    assemble_complete_baxter,
    canary_check,
    enumerate_tilings,
    is_asm,
    is_permutation_matrix,
    lasm,
    matrix_permutation,
    sasm,
)

__version__ = "0.1.0"

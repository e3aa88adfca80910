"""Word families: membership, enumeration, and object-level views."""
from .dias import DIAS_RELATIONS, DIAS_SYMBOLS, dias_encode
from .membership import (
    FAMILIES,
    Family,
    NotAMemberError,
    PER_ZERO,
    PerElement,
    da_closure,
    da_description_report,
    da_prefix_description,
    enumerate_comp,
    enumerate_da,
    enumerate_dias,
    enumerate_end,
    enumerate_fcat,
    enumerate_motz,
    enumerate_per,
    enumerate_pf,
    enumerate_prt,
    enumerate_pw,
    enumerate_schr,
    enumerate_scomp,
    fcat_family,
    get_family,
    has_repeated_letter,
    is_comp_word,
    is_dias_word,
    is_fcat_word,
    is_member,
    is_motz_word,
    is_prt_word,
    is_schr_word,
    is_scomp_word,
    is_twisted_endofunction,
    is_twisted_packed_word,
    is_twisted_parking_function,
    is_twisted_permutation,
    per_substitute,
)
from .paths import (
    da_phi,
    is_kdyck,
    is_motzkin_path,
    is_motzkin_prefix,
    kdyck_to_word,
    motzkin_prefixes,
    motzkin_to_word,
    steps_from_phi,
    steps_to_string,
    string_to_steps,
    word_to_kdyck,
    word_to_motzkin,
)
from .ribbons import (
    composition_to_word,
    format_composition,
    parse_composition,
    ribbon_boxes,
    ribbon_substitute,
    transpose_boxes,
    word_to_composition,
)
from .trees import (
    is_schroeder_tree,
    leaf_count,
    node_count,
    parens_to_tree,
    prt_graft,
    schr_tree_to_word,
    schr_word_to_tree,
    tree_to_parens,
    tree_to_word,
    word_to_tree,
)

__all__ = [name for name in dir() if not name.startswith("_")]

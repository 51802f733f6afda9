"""
File formats for dowkit inputs and outputs.
"""

from dowkit.output.formats import (  # noqa: F401
    STDIO,
    certificate_from_dict,
    certificate_to_dict,
    complex_from_dict,
    complex_to_dict,
    load_certificate,
    load_complex,
    load_matching,
    load_order,
    load_relation,
    load_verifiable,
    load_vertex_map,
    load_zigzag,
    matching_from_dict,
    matching_to_dict,
    read_json,
    relation_from_dict,
    relation_to_dict,
    save_certificate,
    save_complex,
    save_matching,
    save_profile,
    save_relation,
    save_zigzag,
    write_json,
    zigzag_from_dict,
    zigzag_to_dict,
)

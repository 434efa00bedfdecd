from .states import (
    make_basis,
    make_bell,
    make_epr_pair_product,
    make_ghz,
    make_mems_purification,
    make_product,
    make_random_mixed,
    make_random_pure,
    make_random_product_mixed,
    make_w,
    make_werner,
)
from .parsing import parse_state, resolve_state_spec
from .datasets import FAMILIES, check_family_values, load_family, parse_range

__all__ = [
    "make_basis",
    "make_bell",
    "make_epr_pair_product",
    "make_ghz",
    "make_mems_purification",
    "make_product",
    "make_random_mixed",
    "make_random_pure",
    "make_random_product_mixed",
    "make_w",
    "make_werner",
    "parse_state",
    "resolve_state_spec",
    "FAMILIES",
    "check_family_values",
    "load_family",
    "parse_range",
]

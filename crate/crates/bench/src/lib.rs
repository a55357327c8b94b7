//! Fixtures shared by the criterion benches.

use incidence_core::poset::corpus;
use incidence_core::Poset;

/// Posets of increasing size used across bench groups.
pub fn fixtures() -> Vec<(&'static str, Poset)> {
    vec![
        ("chain4", corpus::chain(4)),
        ("diamond", corpus::diamond()),
        ("boolean3", corpus::boolean_lattice(3)),
        ("random7", corpus::random_poset(7, 0.3, 11)),
    ]
}

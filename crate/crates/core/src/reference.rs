//! Frozen reference data for the exceptional types with nontrivial center.
//!
//! The alcove tables and reflection words below are an independent copy of
//! the published Bourbaki-coordinate data for `E6` and `E7`. They exist to
//! be compared against the computed catalog; nothing in the library derives
//! anything from them.

use crate::root_system::{Series, SimpleType};

/// One row of an alcove reference table: an extended root and the vertex
/// opposite its wall, as exact rational strings.
pub struct AlcoveTableRow {
    /// `"alpha_1"` ... or `"highest"` for the highest root.
    pub root_label: &'static str,
    pub root: [&'static str; 8],
    /// `"v1"` ... `"v0"`, matching the facet opposite the root.
    pub vertex_label: &'static str,
    pub vertex: [&'static str; 8],
}

/// Alcove data for `E6`: rows `alpha_1..alpha_6` then the highest root.
pub const E6_ALCOVE_TABLE: [AlcoveTableRow; 7] = [
    AlcoveTableRow {
        root_label: "alpha_1",
        root: ["1/2", "-1/2", "-1/2", "-1/2", "-1/2", "-1/2", "-1/2", "1/2"],
        vertex_label: "v1",
        vertex: ["0", "0", "0", "0", "0", "-2/3", "-2/3", "2/3"],
    },
    AlcoveTableRow {
        root_label: "alpha_2",
        root: ["1", "1", "0", "0", "0", "0", "0", "0"],
        vertex_label: "v2",
        vertex: ["1/4", "1/4", "1/4", "1/4", "1/4", "-1/4", "-1/4", "1/4"],
    },
    AlcoveTableRow {
        root_label: "alpha_3",
        root: ["-1", "1", "0", "0", "0", "0", "0", "0"],
        vertex_label: "v3",
        vertex: ["-1/4", "1/4", "1/4", "1/4", "1/4", "-5/12", "-5/12", "5/12"],
    },
    AlcoveTableRow {
        root_label: "alpha_4",
        root: ["0", "-1", "1", "0", "0", "0", "0", "0"],
        vertex_label: "v4",
        vertex: ["0", "0", "1/3", "1/3", "1/3", "-1/3", "-1/3", "1/3"],
    },
    AlcoveTableRow {
        root_label: "alpha_5",
        root: ["0", "0", "-1", "1", "0", "0", "0", "0"],
        vertex_label: "v5",
        vertex: ["0", "0", "0", "1/2", "1/2", "-1/3", "-1/3", "1/3"],
    },
    AlcoveTableRow {
        root_label: "alpha_6",
        root: ["0", "0", "0", "-1", "1", "0", "0", "0"],
        vertex_label: "v6",
        vertex: ["0", "0", "0", "0", "1", "-1/3", "-1/3", "1/3"],
    },
    AlcoveTableRow {
        root_label: "highest",
        root: ["1/2", "1/2", "1/2", "1/2", "1/2", "-1/2", "-1/2", "1/2"],
        vertex_label: "v0",
        vertex: ["0", "0", "0", "0", "0", "0", "0", "0"],
    },
];

/// Alcove data for `E7`: rows `alpha_1..alpha_7` then the highest root.
pub const E7_ALCOVE_TABLE: [AlcoveTableRow; 8] = [
    AlcoveTableRow {
        root_label: "alpha_1",
        root: ["1/2", "-1/2", "-1/2", "-1/2", "-1/2", "-1/2", "-1/2", "1/2"],
        vertex_label: "v1",
        vertex: ["0", "0", "0", "0", "0", "0", "-1/2", "1/2"],
    },
    AlcoveTableRow {
        root_label: "alpha_2",
        root: ["1", "1", "0", "0", "0", "0", "0", "0"],
        vertex_label: "v2",
        vertex: ["1/4", "1/4", "1/4", "1/4", "1/4", "1/4", "-1/2", "1/2"],
    },
    AlcoveTableRow {
        root_label: "alpha_3",
        root: ["-1", "1", "0", "0", "0", "0", "0", "0"],
        vertex_label: "v3",
        vertex: ["-1/6", "1/6", "1/6", "1/6", "1/6", "1/6", "-1/2", "1/2"],
    },
    AlcoveTableRow {
        root_label: "alpha_4",
        root: ["0", "-1", "1", "0", "0", "0", "0", "0"],
        vertex_label: "v4",
        vertex: ["0", "0", "1/4", "1/4", "1/4", "1/4", "-1/2", "1/2"],
    },
    AlcoveTableRow {
        root_label: "alpha_5",
        root: ["0", "0", "-1", "1", "0", "0", "0", "0"],
        vertex_label: "v5",
        vertex: ["0", "0", "0", "1/3", "1/3", "1/3", "-1/2", "1/2"],
    },
    AlcoveTableRow {
        root_label: "alpha_6",
        root: ["0", "0", "0", "-1", "1", "0", "0", "0"],
        vertex_label: "v6",
        vertex: ["0", "0", "0", "0", "1/2", "1/2", "-1/2", "1/2"],
    },
    AlcoveTableRow {
        root_label: "alpha_7",
        root: ["0", "0", "0", "0", "-1", "1", "0", "0"],
        vertex_label: "v7",
        vertex: ["0", "0", "0", "0", "0", "1", "-1/2", "1/2"],
    },
    AlcoveTableRow {
        root_label: "highest",
        root: ["0", "0", "0", "0", "0", "0", "-1", "1"],
        vertex_label: "v0",
        vertex: ["0", "0", "0", "0", "0", "0", "0", "0"],
    },
];

/// Reflection word for the alcove-preserving Weyl element attached to the
/// `E6` central element of special root 1.
pub const E6_CENTER_WORD_1: [usize; 16] = [1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6];

/// Reflection word for the `E6` central element of special root 6.
pub const E6_CENTER_WORD_6: [usize; 16] = [6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1];

/// Reflection word for the `E7` central element of special root 7.
pub const E7_CENTER_WORD_7: [usize; 27] = [
    7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7,
];

/// The stored reflection word for the central element with the given
/// special-root index, when one is on file (`E6` indices 1 and 6, `E7`
/// index 7).
pub fn center_word(t: SimpleType, special_index: usize) -> Option<&'static [usize]> {
    match (t.series(), t.rank(), special_index) {
        (Series::E, 6, 1) => Some(&E6_CENTER_WORD_1),
        (Series::E, 6, 6) => Some(&E6_CENTER_WORD_6),
        (Series::E, 7, 7) => Some(&E7_CENTER_WORD_7),
        _ => None,
    }
}

/// The reference alcove table for a type, when one is on file.
pub fn alcove_table(t: SimpleType) -> Option<&'static [AlcoveTableRow]> {
    match (t.series(), t.rank()) {
        (Series::E, 6) => Some(&E6_ALCOVE_TABLE),
        (Series::E, 7) => Some(&E7_ALCOVE_TABLE),
        _ => None,
    }
}

//! Golden checks: the computed catalog against the frozen reference tables
//! and reflection words for E6/E7, string-exact.

use alcove_core::alcove::Alcove;
use alcove_core::center::{
    center_elements, dynkin_automorphism, vertex_permutation, weyl_element_for_center,
};
use alcove_core::rational::{rat_to_string, RatVec};
use alcove_core::reference::{alcove_table, center_word};
use alcove_core::root_system::{RootSystem, SimpleType};
use alcove_core::weyl::{evaluate_word, extended_root_permutation};

fn alcove(name: &str) -> Alcove {
    Alcove::new(RootSystem::new(name.parse::<SimpleType>().unwrap()))
}

fn coord_strings(v: &RatVec) -> Vec<String> {
    v.coords().iter().map(rat_to_string).collect()
}

#[test]
fn exceptional_tables_string_exact() {
    for name in ["E6", "E7"] {
        let alc = alcove(name);
        let rs = alc.root_system();
        let table = alcove_table(rs.simple_type()).unwrap();
        assert_eq!(table.len(), rs.rank() + 1);
        for (row_idx, row) in table.iter().enumerate() {
            // Rows are alpha_1..alpha_l then the highest root.
            let (root, vertex) = if row_idx < rs.rank() {
                (rs.simple_root(row_idx + 1).clone(), alc.vertex(row_idx + 1))
            } else {
                (rs.highest_root().clone(), alc.vertex(0))
            };
            assert_eq!(
                coord_strings(&root),
                row.root.to_vec(),
                "{name} root {}",
                row.root_label
            );
            assert_eq!(
                coord_strings(vertex),
                row.vertex.to_vec(),
                "{name} vertex {}",
                row.vertex_label
            );
        }
    }
}

#[test]
fn exceptional_oracle_matches_table() {
    use alcove_core::halfspace::VertexEnumeration;
    for name in ["E6", "E7"] {
        let alc = alcove(name);
        let VertexEnumeration::Vertices(found) = alc.oracle_vertices() else {
            panic!("{name} alcove must be bounded and nonempty");
        };
        let table = alcove_table(alc.root_system().simple_type()).unwrap();
        let expected: std::collections::BTreeSet<RatVec> = table
            .iter()
            .map(|row| {
                RatVec::parse(&row.vertex.join(",")).expect("reference rows parse")
            })
            .collect();
        assert_eq!(found, expected, "{name}");
    }
}

#[test]
fn center_words_reproduce_computed_elements() {
    for (name, indices) in [("E6", vec![1usize, 6]), ("E7", vec![7])] {
        let alc = alcove(name);
        let rs = alc.root_system();
        for i in indices {
            let word = center_word(rs.simple_type(), i).unwrap();
            let from_word = evaluate_word(rs, word).unwrap();
            let z = center_elements(rs)
                .into_iter()
                .find(|z| z.special_index() == i)
                .unwrap();
            let computed = weyl_element_for_center(&alc, z);
            assert_eq!(from_word, computed, "{name} element {i}");
            // Defining properties.
            assert_eq!(
                from_word.apply(&rs.extended_root(0)),
                *rs.simple_root(i),
                "{name}: word {i} must map alpha_0 to alpha_{i}"
            );
            assert!(
                extended_root_permutation(rs, &from_word).is_some(),
                "{name}: word {i} must permute the extended roots"
            );
        }
    }
}

#[test]
fn e6_distinguished_elements_are_mutually_inverse() {
    let alc = alcove("E6");
    let rs = alc.root_system();
    let w1 = evaluate_word(rs, center_word(rs.simple_type(), 1).unwrap()).unwrap();
    let w6 = evaluate_word(rs, center_word(rs.simple_type(), 6).unwrap()).unwrap();
    assert!(w1.compose(&w6).is_identity());
    assert!(w6.compose(&w1).is_identity());
    assert!(!w1.is_identity());
}

#[test]
fn e6_vertex_three_cycles() {
    let alc = alcove("E6");
    let z1 = center_elements(alc.root_system())
        .into_iter()
        .find(|z| z.special_index() == 1)
        .unwrap();
    let perm = vertex_permutation(&alc, z1);
    assert_eq!(perm.cycles(), vec![vec![0, 1, 6], vec![2, 3, 5], vec![4]]);
    assert_eq!(perm.order(), 3);
    assert_eq!(perm, dynkin_automorphism(&alc, z1));
}

#[test]
fn e7_vertex_involution() {
    let alc = alcove("E7");
    let z7 = center_elements(alc.root_system())
        .into_iter()
        .find(|z| z.special_index() == 7)
        .unwrap();
    let perm = vertex_permutation(&alc, z7);
    assert_eq!(
        perm.cycles(),
        vec![vec![0, 7], vec![1, 6], vec![2], vec![3, 5], vec![4]]
    );
    assert_eq!(perm.order(), 2);
    assert_eq!(perm, dynkin_automorphism(&alc, z7));
}

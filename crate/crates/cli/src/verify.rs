//! Built-in verification suite: recomputes the reference tables, reflection
//! words, vertex cycles, and fixed loci, and prints one PASS/FAIL line per
//! check.

use alcove_core::alcove::{su_n_alcove, Alcove};
use alcove_core::center::{
    center_elements, dynkin_automorphism, fixed_locus_su_n, vertex_permutation,
    weyl_element_for_center, CenterElement,
};
use alcove_core::rational::{rat_to_string, RatVec};
use alcove_core::reference::{alcove_table, center_word};
use alcove_core::root_system::{all_types_up_to_rank_8, RootSystem, SimpleType};
use alcove_core::weyl::evaluate_word;

struct Suite {
    passed: usize,
    failed: usize,
}

impl Suite {
    fn check(&mut self, name: &str, ok: bool) {
        if ok {
            self.passed += 1;
            println!("[PASS] {name}");
        } else {
            self.failed += 1;
            println!("[FAIL] {name}");
        }
    }
}

/// Run every check; true iff all pass.
pub fn run_verification() -> bool {
    let mut suite = Suite {
        passed: 0,
        failed: 0,
    };

    for name in ["E6", "E7"] {
        let alc = alcove(name);
        suite.check(
            &format!("alcove table {name} matches the reference rows exactly"),
            table_matches(&alc),
        );
    }

    for (name, indices) in [("E6", vec![1usize, 6]), ("E7", vec![7])] {
        let alc = alcove(name);
        for i in indices {
            suite.check(
                &format!("reflection word for {name} element {i} reproduces the computed Weyl element"),
                word_matches(&alc, i),
            );
        }
    }

    suite.check(
        "SU(n) generator acts as the n-cycle (v0 v1 ... v_{n-1}) for n = 2..12",
        (2..=12).all(su_n_cycle_ok),
    );

    suite.check(
        "SU(4) Z/2 fixed locus has the expected segment endpoints",
        su4_fixed_segment_ok(),
    );

    suite.check(
        "vertex permutation equals Dynkin automorphism for every type with nontrivial center",
        coherence_ok(),
    );

    println!(
        "summary: {}/{} checks passed",
        suite.passed,
        suite.passed + suite.failed
    );
    suite.failed == 0
}

fn alcove(name: &str) -> Alcove {
    Alcove::new(RootSystem::new(name.parse::<SimpleType>().unwrap()))
}

fn table_matches(alc: &Alcove) -> bool {
    let rs = alc.root_system();
    let Some(table) = alcove_table(rs.simple_type()) else {
        return false;
    };
    table.iter().enumerate().all(|(row_idx, row)| {
        let (root, vertex) = if row_idx < rs.rank() {
            (rs.simple_root(row_idx + 1).clone(), alc.vertex(row_idx + 1))
        } else {
            (rs.highest_root().clone(), alc.vertex(0))
        };
        coords(&root) == row.root && coords(vertex) == row.vertex
    })
}

fn coords(v: &RatVec) -> Vec<String> {
    v.coords().iter().map(rat_to_string).collect()
}

fn word_matches(alc: &Alcove, special_index: usize) -> bool {
    let rs = alc.root_system();
    let Some(word) = center_word(rs.simple_type(), special_index) else {
        return false;
    };
    let Ok(from_word) = evaluate_word(rs, word) else {
        return false;
    };
    let Ok(z) = CenterElement::new(rs, special_index) else {
        return false;
    };
    let computed = weyl_element_for_center(alc, z);
    from_word == computed
        && from_word.apply(&rs.extended_root(0)) == *rs.simple_root(special_index)
}

fn su_n_cycle_ok(n: usize) -> bool {
    let alc = su_n_alcove(n);
    let Ok(gen) = CenterElement::new(alc.root_system(), 1) else {
        return false;
    };
    let perm = vertex_permutation(&alc, gen);
    (0..n).all(|j| perm.apply(j) == (j + 1) % n)
}

fn su4_fixed_segment_ok() -> bool {
    let Ok(locus) = fixed_locus_su_n(4, 2) else {
        return false;
    };
    let expected = [
        RatVec::from_pairs(&[(1, 4), (1, 4), (-1, 4), (-1, 4)]),
        RatVec::from_pairs(&[(1, 2), (0, 1), (0, 1), (-1, 2)]),
    ];
    locus.generators().len() == 2
        && locus
            .generators()
            .iter()
            .zip(&expected)
            .all(|(g, e)| g.cartesian() == e)
}

fn coherence_ok() -> bool {
    all_types_up_to_rank_8()
        .into_iter()
        .map(RootSystem::new)
        .filter(|rs| rs.center_order() > 1)
        .all(|rs| {
            let alc = Alcove::new(rs.clone());
            center_elements(&rs)
                .into_iter()
                .all(|z| vertex_permutation(&alc, z) == dynkin_automorphism(&alc, z))
        })
}

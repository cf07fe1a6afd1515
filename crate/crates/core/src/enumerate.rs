//! Exhaustive generation of small preorders for sweep suites.
//!
//! Preorders on up to three labeled elements are enumerated by brute force:
//! every subset of the off-diagonal generating pairs is closed and the
//! results are deduplicated. Four-element coverage comes from a curated list
//! of structurally distinct cases instead, which keeps sweeps fast while
//! still exercising a chain, a diamond, a disconnected order, and a preorder
//! with a genuine cycle.

use std::collections::BTreeSet;

use crate::preorder::Preorder;

/// Every preorder on `n` labeled elements (labels `"1"` through `"n"`),
/// deduplicated and deterministically ordered. Intended for small `n`; the
/// enumeration walks all `2^(n(n-1))` generating relations.
pub fn all_preorders(n: usize) -> Vec<Preorder> {
    assert!(
        n * n.saturating_sub(1) <= 20,
        "brute enumeration is only meant for tiny element counts"
    );
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut off_diagonal = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                off_diagonal.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    let mut seen = BTreeSet::new();
    for mask in 0u64..(1u64 << off_diagonal.len()) {
        let pairs: Vec<(String, String)> = off_diagonal
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, pair)| pair.clone())
            .collect();
        let preorder = Preorder::closure(&labels, &pairs).expect("generated labels are valid");
        seen.insert(preorder);
    }
    seen.into_iter().collect()
}

/// One named case in a sweep.
#[derive(Debug, Clone)]
pub struct SweepCase {
    pub name: String,
    pub preorder: Preorder,
}

fn named(name: &str, labels: &[&str], pairs: &[(&str, &str)]) -> SweepCase {
    SweepCase {
        name: name.to_string(),
        preorder: Preorder::closure(labels, pairs).expect("curated cases are valid"),
    }
}

/// The curated four-element cases: a chain, a diamond, an antichain with one
/// edge, and a preorder whose first two elements form a cycle.
pub fn curated_four_element() -> Vec<SweepCase> {
    let labels = ["a", "b", "c", "d"];
    vec![
        named("chain4", &labels, &[("a", "b"), ("b", "c"), ("c", "d")]),
        named(
            "diamond4",
            &labels,
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        ),
        named("antichain_plus_edge4", &labels, &[("a", "b")]),
        named(
            "two_cycle4",
            &labels,
            &[("a", "b"), ("b", "a"), ("b", "c"), ("c", "d")],
        ),
    ]
}

/// The standard sweep: every preorder on up to `min(max_size, 3)` labeled
/// elements, plus the curated four-element cases when `max_size >= 4`.
/// Names and order are deterministic.
pub fn sweep_cases(max_size: usize) -> Vec<SweepCase> {
    let mut cases = Vec::new();
    for n in 1..=max_size.min(3) {
        for (i, preorder) in all_preorders(n).into_iter().enumerate() {
            cases.push(SweepCase {
                name: format!("n{n}_{i:02}"),
                preorder,
            });
        }
    }
    if max_size >= 4 {
        cases.extend(curated_four_element());
    }
    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_labeled_topology_sequence() {
        assert_eq!(all_preorders(1).len(), 1);
        assert_eq!(all_preorders(2).len(), 4);
        assert_eq!(all_preorders(3).len(), 29);
    }

    #[test]
    fn enumerated_preorders_are_distinct_and_closed() {
        let all = all_preorders(3);
        let unique: BTreeSet<&Preorder> = all.iter().collect();
        assert_eq!(unique.len(), all.len());
        for preorder in &all {
            let reclosed =
                Preorder::closure(preorder.labels(), &preorder.relation_pairs()).unwrap();
            assert_eq!(&reclosed, preorder);
        }
    }

    #[test]
    fn sweep_has_deterministic_names_and_sizes() {
        let cases = sweep_cases(4);
        assert_eq!(cases.len(), 1 + 4 + 29 + 4);
        assert_eq!(cases[0].name, "n1_00");
        assert_eq!(cases.last().unwrap().name, "two_cycle4");
        assert!(cases.iter().all(|c| c.preorder.len() <= 4));

        let again = sweep_cases(4);
        for (a, b) in cases.iter().zip(&again) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.preorder, b.preorder);
        }
    }

    #[test]
    fn sweep_can_be_capped_below_four() {
        let cases = sweep_cases(2);
        assert_eq!(cases.len(), 5);
        assert!(cases.iter().all(|c| c.preorder.len() <= 2));
    }

    #[test]
    fn the_cycle_case_really_contains_a_cycle() {
        let cases = curated_four_element();
        let cycle = cases.iter().find(|c| c.name == "two_cycle4").unwrap();
        assert!(!cycle.preorder.is_partial_order());
        assert!(cycle.preorder.equivalent("a", "b").unwrap());

        let comparable = cycle.preorder.comparable_pairs().len();
        assert_eq!(comparable, 11);
    }
}

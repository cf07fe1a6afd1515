//! Constructive decomposition of generalized Jordan pairs.
//!
//! Over a 2-torsion-free commutative ring, every generalized Jordan pair
//! (outer, relating) on an incidence algebra decomposes: an assembled map
//! built purely from diagonal data reproduces the outer map exactly, and the
//! unique relating derivation can be recovered from the outer map alone.
//! [`certify`] performs the whole construction and re-verifies every step,
//! returning a certificate whose verdict is the conjunction of all checks.

use crate::algebra::{GenPair, IncidenceAlgebra, LinearMap};
use crate::error::{Error, Result};
use crate::predicates;
use crate::report::{ComponentRelationReport, IdentityReport};
use crate::ring::Scalar;

fn first_witness(report: &IdentityReport) -> String {
    report
        .witnesses
        .first()
        .map(|w| format!("inputs [{}]: {} != {}", w.inputs.join(", "), w.left, w.right))
        .unwrap_or_else(|| "no witness recorded".to_string())
}

fn require_two_torsion_free(algebra: &IncidenceAlgebra) -> Result<()> {
    let ring = algebra.ring();
    if ring.is_two_torsion_free() {
        Ok(())
    } else {
        Err(Error::TwoTorsion(ring))
    }
}

fn require_generalized_jordan(pair: &GenPair) -> Result<()> {
    let report = predicates::is_generalized_jordan_derivation(pair);
    if report.passed {
        Ok(())
    } else {
        Err(Error::PredicateFailed {
            class: "generalized Jordan derivation pair".to_string(),
            witness: first_witness(&report),
        })
    }
}

fn require_jordan(tau: &LinearMap) -> Result<()> {
    let report = predicates::is_jordan_derivation(tau);
    if report.passed {
        Ok(())
    } else {
        Err(Error::PredicateFailed {
            class: "Jordan derivation".to_string(),
            witness: first_witness(&report),
        })
    }
}

fn assembled_map(pair: &GenPair) -> LinearMap {
    let algebra = pair.algebra();
    let outer = pair.outer();
    let relating = pair.relating();
    let images = algebra.basis().iter().map(|&b| {
        let diagonal = algebra
            .basis_index_ids(b.x(), b.x())
            .expect("reflexive pair");
        let e_diag = algebra.basis_element(diagonal);
        let e_b = algebra.basis_element(b);
        let image = outer
            .image(diagonal)
            .convolve(&e_b)
            .expect("same algebra")
            .add(&e_diag.convolve(relating.image(b)).expect("same algebra"))
            .expect("same algebra");
        (b, image)
    });
    LinearMap::from_images(algebra, images).expect("validated images")
}

/// Builds the map determined by the pair's diagonal data:
/// each basis element `e(i,j)` goes to `f(e_ii)e_ij + e_ii d(e_ij)`, where
/// `f` is the outer and `d` the relating map. For a valid pair over a
/// 2-torsion-free ring this reproduces the outer map exactly; in particular
/// the diagonal images agree by construction plus the diagonal-splits
/// identity.
pub fn assemble_from_diagonal(pair: &GenPair) -> Result<LinearMap> {
    require_two_torsion_free(pair.algebra())?;
    require_generalized_jordan(pair)?;
    Ok(assembled_map(pair))
}

/// Recovers the only possible relating map for an outer map `f`:
/// `d = f - left_multiplication(f(1))`. In a unital algebra the relating
/// map of a generalized derivation is unique, because a left multiplication
/// is itself a derivation only when it multiplies by zero. No validation is
/// performed; certification happens downstream.
pub fn extract_relating_derivation(outer: &LinearMap) -> LinearMap {
    let algebra = outer.algebra();
    let at_identity = outer
        .apply(&algebra.identity())
        .expect("identity lives in the same algebra");
    outer
        .sub(&LinearMap::left_multiplication(&at_identity))
        .expect("same algebra")
}

fn strip_reverse_raw(map: &LinearMap) -> LinearMap {
    let algebra = map.algebra();
    let images = algebra.basis().iter().map(|&b| {
        let image = map.image(b);
        let reversed = if b.x() == b.y() {
            None
        } else {
            algebra.basis_index_ids(b.y(), b.x()).ok()
        };
        let kept = image
            .support()
            .filter(|(index, _)| Some(*index) != reversed)
            .map(|(index, coefficient)| (index, coefficient.clone()));
        let stripped = algebra.element(kept).expect("subset of a valid support");
        (b, stripped)
    });
    LinearMap::from_images(algebra, images).expect("validated images")
}

/// Removes, from the image of each off-diagonal basis element `e(i,j)`, the
/// component sitting on the reversed index `e(j,i)` when that index exists
/// (which requires a preorder cycle through `i` and `j`). On a partial
/// order the result equals the input. Requires a 2-torsion-free ring and a
/// map satisfying the square rule; the result is then the relating
/// derivation candidate read off the map's components.
pub fn strip_reverse_components(tau: &LinearMap) -> Result<LinearMap> {
    require_two_torsion_free(tau.algebra())?;
    require_jordan(tau)?;
    Ok(strip_reverse_raw(tau))
}

/// Checks `f(ab) = f(a)b + a d(b)` on every ordered pair of basis elements,
/// for an arbitrary candidate pair of maps on one algebra.
pub fn verify_generalized_leibniz(
    outer: &LinearMap,
    relating: &LinearMap,
) -> Result<IdentityReport> {
    let algebra = outer.algebra();
    if !algebra.same(relating.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let mut report = IdentityReport::new("generalized-leibniz");
    for &a in algebra.basis() {
        let ea = algebra.basis_element(a);
        for &b in algebra.basis() {
            let eb = algebra.basis_element(b);
            let product = ea.convolve(&eb).expect("same algebra");
            let left = outer.apply(&product).expect("same algebra");
            let right = outer
                .image(a)
                .convolve(&eb)
                .expect("same algebra")
                .add(&ea.convolve(relating.image(b)).expect("same algebra"))
                .expect("same algebra");
            let (ax, ay) = algebra.label_pair(a);
            let (bx, by) = algebra.label_pair(b);
            report.check(
                vec![format!("e({ax},{ay})"), format!("e({bx},{by})")],
                &left,
                &right,
            );
        }
    }
    Ok(report)
}

fn component_relations_raw(tau: &LinearMap) -> ComponentRelationReport {
    let algebra = tau.algebra();
    let preorder = algebra.preorder();
    let ring = algebra.ring();
    let zero = Scalar::zero(ring);
    let mut report = ComponentRelationReport::new();
    let n = preorder.len() as u32;
    let index = |x: u32, y: u32| algebra.basis_index_ids(x, y).expect("comparable");
    let read = |from: u32, from2: u32, at: u32, at2: u32| -> Scalar {
        tau.image(index(from, from2)).coefficient(index(at, at2))
    };

    for i in 0..n {
        report.record(
            "diagonal-vanishes",
            vec![preorder.label(i).to_string()],
            read(i, i, i, i).to_string(),
            zero.to_string(),
        );
    }

    for j in 0..n {
        for k in 0..n {
            if j == k || !preorder.leq_ids(j, k) {
                continue;
            }
            let sum = read(j, j, j, k).add(&read(k, k, j, k)).expect("same ring");
            report.record(
                "annihilation",
                vec![preorder.label(j).to_string(), preorder.label(k).to_string()],
                sum.to_string(),
                zero.to_string(),
            );
        }
    }

    for i in 0..n {
        for j in 0..n {
            if i == j || !preorder.leq_ids(i, j) || preorder.leq_ids(j, i) {
                continue;
            }
            for k in 0..n {
                if k == i || k == j || !preorder.leq_ids(j, k) || preorder.leq_ids(k, j) {
                    continue;
                }
                let sum = read(i, j, i, j).add(&read(j, k, j, k)).expect("same ring");
                report.record(
                    "chain-additivity",
                    vec![
                        preorder.label(i).to_string(),
                        preorder.label(j).to_string(),
                        preorder.label(k).to_string(),
                    ],
                    sum.to_string(),
                    read(i, k, i, k).to_string(),
                );
            }
        }
    }
    report
}

/// Scans the components of a square-rule map's images for the relations the
/// decomposition relies on:
///
/// - `diagonal-vanishes`: the `(i,i)` component of the image of `e_ii` is
///   zero,
/// - `annihilation`: for comparable `j != k`, the `(j,k)` components of the
///   images of `e_jj` and `e_kk` sum to zero,
/// - `chain-additivity`: along strict chains `i < j < k` of pairwise
///   non-equivalent elements, the leading components add up:
///   the `(i,j)` component of the image of `e_ij` plus the `(j,k)` component
///   of the image of `e_jk` equals the `(i,k)` component of the image of
///   `e_ik`.
pub fn verify_component_relations(tau: &LinearMap) -> Result<ComponentRelationReport> {
    require_two_torsion_free(tau.algebra())?;
    require_jordan(tau)?;
    Ok(component_relations_raw(tau))
}

/// The outcome of [`certify`]: the assembled map, the extracted relating
/// derivation, the residual, and every verification report.
#[derive(Debug, Clone)]
pub struct DecompositionCertificate {
    outer: LinearMap,
    relating: LinearMap,
    assembled: LinearMap,
    relating_derivation: LinearMap,
    residual: LinearMap,
    checks: Vec<IdentityReport>,
    component_relations: ComponentRelationReport,
    verdict: bool,
}

impl DecompositionCertificate {
    pub fn outer(&self) -> &LinearMap {
        &self.outer
    }

    pub fn relating(&self) -> &LinearMap {
        &self.relating
    }

    pub fn assembled(&self) -> &LinearMap {
        &self.assembled
    }

    pub fn relating_derivation(&self) -> &LinearMap {
        &self.relating_derivation
    }

    pub fn residual(&self) -> &LinearMap {
        &self.residual
    }

    pub fn checks(&self) -> &[IdentityReport] {
        &self.checks
    }

    pub fn component_relations(&self) -> &ComponentRelationReport {
        &self.component_relations
    }

    pub fn verdict(&self) -> bool {
        self.verdict
    }
}

/// Runs the full decomposition for a generalized Jordan pair over a
/// 2-torsion-free ring and re-verifies every claimed property:
///
/// 1. `diagonal-assembly`: the assembled map agrees with the outer map on
///    every diagonal basis element,
/// 2. `generalized-leibniz`: the assembled map satisfies the product rule
///    against the extracted relating derivation,
/// 3. `relating-is-derivation`: the extracted map passes the product rule,
/// 4. `residual-zero`: outer minus assembled vanishes on every basis index,
/// 5. `pair-with-relating`: (outer, extracted) is a generalized derivation
///    pair,
/// 6. `route-agreement`: the extracted map equals the input relating map
///    with reverse components stripped,
///
/// plus the component-relation scan of the input relating map. Hypothesis
/// violations (2-torsion, failed pair predicate) are input errors; with
/// valid hypotheses a failed check yields verdict `false` with witnesses.
pub fn certify(pair: &GenPair) -> Result<DecompositionCertificate> {
    require_two_torsion_free(pair.algebra())?;
    require_generalized_jordan(pair)?;

    let algebra = pair.algebra();
    let outer = pair.outer().clone();
    let relating = pair.relating().clone();
    let assembled = assembled_map(pair);
    let relating_derivation = extract_relating_derivation(&outer);
    let residual = outer.sub(&assembled).expect("same algebra");

    let mut checks = Vec::new();

    let mut diagonal = IdentityReport::new("diagonal-assembly");
    for i in 0..algebra.preorder().len() as u32 {
        let b = algebra.basis_index_ids(i, i).expect("reflexive pair");
        let (x, y) = algebra.label_pair(b);
        diagonal.check(
            vec![format!("e({x},{y})")],
            assembled.image(b),
            outer.image(b),
        );
    }
    checks.push(diagonal);

    checks.push(
        verify_generalized_leibniz(&assembled, &relating_derivation).expect("same algebra"),
    );

    let mut derivation_check = predicates::is_derivation(&relating_derivation);
    derivation_check.identity = "relating-is-derivation".to_string();
    checks.push(derivation_check);

    let mut residual_check = IdentityReport::new("residual-zero");
    for &b in algebra.basis() {
        let (x, y) = algebra.label_pair(b);
        residual_check.check_zero(vec![format!("e({x},{y})")], residual.image(b));
    }
    checks.push(residual_check);

    let candidate = GenPair::new(outer.clone(), relating_derivation.clone())?;
    let mut pair_check = predicates::is_generalized_derivation(&candidate);
    pair_check.identity = "pair-with-relating".to_string();
    checks.push(pair_check);

    let stripped = strip_reverse_raw(&relating);
    let mut route = IdentityReport::new("route-agreement");
    for &b in algebra.basis() {
        let (x, y) = algebra.label_pair(b);
        route.check(
            vec![format!("e({x},{y})")],
            relating_derivation.image(b),
            stripped.image(b),
        );
    }
    checks.push(route);

    let component_relations = component_relations_raw(&relating);

    let verdict = checks.iter().all(|c| c.passed) && component_relations.passed;
    Ok(DecompositionCertificate {
        outer,
        relating,
        assembled,
        relating_derivation,
        residual,
        checks,
        component_relations,
        verdict,
    })
}

//! Deciding procedures for the map classes.
//!
//! Each predicate checks its defining identity on basis elements only. That
//! is enough: both sides of every identity are bilinear (or, for the square
//! rules, quadratic with a bilinear polarization), so validity on the basis
//! instances listed here extends to all elements over any commutative ring.
//!
//! Every decision comes back as an [`IdentityReport`] carrying a witness for
//! each failing instance, so callers can show exactly where a candidate map
//! breaks the rule instead of just learning that it does.

use crate::algebra::{BasisIndex, GenPair, IncidenceAlgebra, IncidenceElement, LinearMap};
use crate::error::{Error, Result};
use crate::report::IdentityReport;

fn mul(a: &IncidenceElement, b: &IncidenceElement) -> IncidenceElement {
    a.convolve(b).expect("operands share an algebra")
}

fn add(a: &IncidenceElement, b: &IncidenceElement) -> IncidenceElement {
    a.add(b).expect("operands share an algebra")
}

fn pair_name(algebra: &IncidenceAlgebra, index: BasisIndex) -> String {
    let (x, y) = algebra.label_pair(index);
    format!("e({x},{y})")
}

/// Checks the product rule `d(ab) = d(a)b + a d(b)` on every ordered pair of
/// basis elements.
pub fn is_derivation(map: &LinearMap) -> IdentityReport {
    let algebra = map.algebra();
    let mut report = IdentityReport::new("derivation-product-rule");
    for &a in algebra.basis() {
        let ea = algebra.basis_element(a);
        for &b in algebra.basis() {
            let eb = algebra.basis_element(b);
            let left = map.apply(&mul(&ea, &eb)).expect("same algebra");
            let right = add(&mul(map.image(a), &eb), &mul(&ea, map.image(b)));
            report.check(
                vec![pair_name(algebra, a), pair_name(algebra, b)],
                &left,
                &right,
            );
        }
    }
    report
}

/// Checks the square rule `d(a^2) = d(a)a + a d(a)` on every basis element,
/// together with its polarized form
/// `d(ab + ba) = d(a)b + a d(b) + d(b)a + b d(a)` on every unordered pair of
/// distinct basis elements. Together these instances are equivalent to the
/// square rule on all elements.
pub fn is_jordan_derivation(map: &LinearMap) -> IdentityReport {
    let algebra = map.algebra();
    let mut report = IdentityReport::new("jordan-square-rule");
    let basis = algebra.basis();
    for &a in basis {
        let ea = algebra.basis_element(a);
        let left = map.apply(&mul(&ea, &ea)).expect("same algebra");
        let right = add(&mul(map.image(a), &ea), &mul(&ea, map.image(a)));
        report.check(vec![pair_name(algebra, a)], &left, &right);
    }
    for (apos, &a) in basis.iter().enumerate() {
        let ea = algebra.basis_element(a);
        for &b in basis.iter().skip(apos + 1) {
            let eb = algebra.basis_element(b);
            let symmetrized = add(&mul(&ea, &eb), &mul(&eb, &ea));
            let left = map.apply(&symmetrized).expect("same algebra");
            let right = add(
                &add(&mul(map.image(a), &eb), &mul(&ea, map.image(b))),
                &add(&mul(map.image(b), &ea), &mul(&eb, map.image(a))),
            );
            report.check(
                vec![pair_name(algebra, a), pair_name(algebra, b)],
                &left,
                &right,
            );
        }
    }
    report
}

/// Checks that the pair's relating map is a derivation and that the outer
/// map satisfies `f(ab) = f(a)b + a d(b)` against it, on every ordered pair
/// of basis elements.
pub fn is_generalized_derivation(pair: &GenPair) -> IdentityReport {
    let algebra = pair.algebra();
    let outer = pair.outer();
    let relating = pair.relating();
    let mut report = IdentityReport::new("generalized-product-rule");
    report.absorb("relating", is_derivation(relating));
    for &a in algebra.basis() {
        let ea = algebra.basis_element(a);
        for &b in algebra.basis() {
            let eb = algebra.basis_element(b);
            let left = outer.apply(&mul(&ea, &eb)).expect("same algebra");
            let right = add(&mul(outer.image(a), &eb), &mul(&ea, relating.image(b)));
            report.check(
                vec![pair_name(algebra, a), pair_name(algebra, b)],
                &left,
                &right,
            );
        }
    }
    report
}

/// Checks that the pair's relating map satisfies the square rule and that
/// the outer map satisfies `f(a^2) = f(a)a + a d(b)` with the relating map
/// on the right, on every basis element plus the polarized instances on
/// every unordered pair of distinct basis elements.
pub fn is_generalized_jordan_derivation(pair: &GenPair) -> IdentityReport {
    let algebra = pair.algebra();
    let outer = pair.outer();
    let relating = pair.relating();
    let mut report = IdentityReport::new("generalized-jordan-square-rule");
    report.absorb("relating", is_jordan_derivation(relating));
    let basis = algebra.basis();
    for &a in basis {
        let ea = algebra.basis_element(a);
        let left = outer.apply(&mul(&ea, &ea)).expect("same algebra");
        let right = add(&mul(outer.image(a), &ea), &mul(&ea, relating.image(a)));
        report.check(vec![pair_name(algebra, a)], &left, &right);
    }
    for (apos, &a) in basis.iter().enumerate() {
        let ea = algebra.basis_element(a);
        for &b in basis.iter().skip(apos + 1) {
            let eb = algebra.basis_element(b);
            let symmetrized = add(&mul(&ea, &eb), &mul(&eb, &ea));
            let left = outer.apply(&symmetrized).expect("same algebra");
            let right = add(
                &add(&mul(outer.image(a), &eb), &mul(&ea, relating.image(b))),
                &add(&mul(outer.image(b), &ea), &mul(&eb, relating.image(a))),
            );
            report.check(
                vec![pair_name(algebra, a), pair_name(algebra, b)],
                &left,
                &right,
            );
        }
    }
    report
}

/// Checks the three product identities a generalized Jordan pair satisfies:
/// the linearized square rule, the sandwich rule
/// `f(aba) = f(a)ba + a d(b)a + ab d(a)`, and the symmetrized triple rule
/// on `abc + cba`. The latter two need a 2-torsion-free ring to follow from
/// the square rule, so they are genuine extra content, checked on all basis
/// pairs and triples.
pub fn verify_jordan_triple_identities(pair: &GenPair) -> IdentityReport {
    let algebra = pair.algebra();
    let outer = pair.outer();
    let relating = pair.relating();
    let mut report = IdentityReport::new("jordan-triple-identities");
    let basis = algebra.basis();
    let elements: Vec<IncidenceElement> =
        basis.iter().map(|&b| algebra.basis_element(b)).collect();

    for (apos, &a) in basis.iter().enumerate() {
        let ea = &elements[apos];
        for (bpos, &b) in basis.iter().enumerate().skip(apos) {
            let eb = &elements[bpos];
            let symmetrized = add(&mul(ea, eb), &mul(eb, ea));
            let left = outer.apply(&symmetrized).expect("same algebra");
            let right = add(
                &add(&mul(outer.image(a), eb), &mul(ea, relating.image(b))),
                &add(&mul(outer.image(b), ea), &mul(eb, relating.image(a))),
            );
            report.check(
                vec![
                    "linearized-square".to_string(),
                    pair_name(algebra, a),
                    pair_name(algebra, b),
                ],
                &left,
                &right,
            );
        }
    }

    for (apos, &a) in basis.iter().enumerate() {
        let ea = &elements[apos];
        for (bpos, &b) in basis.iter().enumerate() {
            let eb = &elements[bpos];
            let left = outer.apply(&mul(&mul(ea, eb), ea)).expect("same algebra");
            let right = add(
                &add(
                    &mul(outer.image(a), &mul(eb, ea)),
                    &mul(&mul(ea, relating.image(b)), ea),
                ),
                &mul(&mul(ea, eb), relating.image(a)),
            );
            report.check(
                vec![
                    "sandwich".to_string(),
                    pair_name(algebra, a),
                    pair_name(algebra, b),
                ],
                &left,
                &right,
            );
        }
    }

    for (apos, &a) in basis.iter().enumerate() {
        let ea = &elements[apos];
        for (bpos, &b) in basis.iter().enumerate() {
            let eb = &elements[bpos];
            for (cpos, &c) in basis.iter().enumerate() {
                let ec = &elements[cpos];
                let symmetrized = add(&mul(&mul(ea, eb), ec), &mul(&mul(ec, eb), ea));
                let left = outer.apply(&symmetrized).expect("same algebra");
                let right = add(
                    &add(
                        &add(
                            &mul(outer.image(a), &mul(eb, ec)),
                            &mul(&mul(ea, relating.image(b)), ec),
                        ),
                        &mul(&mul(ea, eb), relating.image(c)),
                    ),
                    &add(
                        &add(
                            &mul(outer.image(c), &mul(eb, ea)),
                            &mul(&mul(ec, relating.image(b)), ea),
                        ),
                        &mul(&mul(ec, eb), relating.image(a)),
                    ),
                );
                report.check(
                    vec![
                        "symmetrized-triple".to_string(),
                        pair_name(algebra, a),
                        pair_name(algebra, b),
                        pair_name(algebra, c),
                    ],
                    &left,
                    &right,
                );
            }
        }
    }
    report
}

/// Checks the identities a generalized Jordan pair satisfies at an
/// idempotent `e` and an element `a` with `ea = ae = 0`:
///
/// - the image splits: `f(e) = f(e)e + e d(e)`,
/// - annihilation transfers to the pair: `f(a)e + a d(e) = 0` and
///   `f(e)a + e d(a) = 0`,
/// - sandwiches by the relating map vanish: `e d(a) e = 0` and
///   `a d(e) a = 0`.
///
/// The preconditions (idempotency of `e`, two-sided annihilation) are
/// checked first and reported as errors, not identity failures.
pub fn verify_idempotent_identities(
    pair: &GenPair,
    e: &IncidenceElement,
    a: &IncidenceElement,
) -> Result<IdentityReport> {
    let algebra = pair.algebra();
    if !algebra.same(e.algebra()) || !algebra.same(a.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let ee = mul(e, e);
    if ee != *e {
        return Err(Error::Precondition {
            name: "idempotency".to_string(),
            detail: format!("e*e = {} differs from e = {}", ee.render(), e.render()),
        });
    }
    let ea = mul(e, a);
    let ae = mul(a, e);
    if !ea.is_zero() || !ae.is_zero() {
        return Err(Error::Precondition {
            name: "annihilation".to_string(),
            detail: format!(
                "e*a = {} and a*e = {} must both vanish",
                ea.render(),
                ae.render()
            ),
        });
    }

    let outer = pair.outer();
    let relating = pair.relating();
    let fe = outer.apply(e)?;
    let de = relating.apply(e)?;
    let fa = outer.apply(a)?;
    let da = relating.apply(a)?;

    let mut report = IdentityReport::new("idempotent-identities");
    report.check(
        vec!["image-splits".to_string(), e.render()],
        &fe,
        &add(&mul(&fe, e), &mul(e, &de)),
    );
    report.check_zero(
        vec!["outer-annihilates".to_string(), a.render(), e.render()],
        &add(&mul(&fa, e), &mul(a, &de)),
    );
    report.check_zero(
        vec![
            "outer-annihilates-reversed".to_string(),
            e.render(),
            a.render(),
        ],
        &add(&mul(&fe, a), &mul(e, &da)),
    );
    report.check_zero(
        vec!["relating-sandwich".to_string(), e.render(), a.render()],
        &mul(&mul(e, &da), e),
    );
    report.check_zero(
        vec![
            "relating-sandwich-reversed".to_string(),
            a.render(),
            e.render(),
        ],
        &mul(&mul(a, &de), a),
    );
    Ok(report)
}

/// Checks the basis-level consequences used by the decomposition:
///
/// - every diagonal image splits: `f(e_ii) = f(e_ii)e_ii + e_ii d(e_ii)`,
/// - relating sandwiches vanish: `e_ki d(e_ii) e_ij = 0` whenever
///   `k <= i <= j`,
/// - off-diagonal images expand through the matching diagonal idempotents:
///   `f(e_ij) = f(e_ii)e_ij + e_ii d(e_ij) + f(e_ij)e_ii + e_ij d(e_ii)`
///   for comparable `i != j`,
/// - disjoint diagonals annihilate: `f(e_kj)e_ii + e_kj d(e_ii) = 0` and
///   `f(e_ii)e_kj + e_ii d(e_kj) = 0` whenever `k != i` and `j != i`.
pub fn verify_basis_identities(pair: &GenPair) -> IdentityReport {
    let algebra = pair.algebra();
    let preorder = algebra.preorder();
    let outer = pair.outer();
    let relating = pair.relating();
    let mut report = IdentityReport::new("basis-identities");
    let n = preorder.len() as u32;
    let diag = |i: u32| algebra.basis_index_ids(i, i).expect("reflexive");

    for i in 0..n {
        let eii = diag(i);
        let basis_eii = algebra.basis_element(eii);
        report.check(
            vec!["diagonal-splits".to_string(), pair_name(algebra, eii)],
            outer.image(eii),
            &add(
                &mul(outer.image(eii), &basis_eii),
                &mul(&basis_eii, relating.image(eii)),
            ),
        );
    }

    for i in 0..n {
        let eii = diag(i);
        for k in 0..n {
            if !preorder.leq_ids(k, i) {
                continue;
            }
            let eki = algebra.basis_index_ids(k, i).expect("comparable");
            let basis_eki = algebra.basis_element(eki);
            for j in 0..n {
                if !preorder.leq_ids(i, j) {
                    continue;
                }
                let eij = algebra.basis_index_ids(i, j).expect("comparable");
                let basis_eij = algebra.basis_element(eij);
                report.check_zero(
                    vec![
                        "relating-sandwich".to_string(),
                        pair_name(algebra, eki),
                        pair_name(algebra, eii),
                        pair_name(algebra, eij),
                    ],
                    &mul(&mul(&basis_eki, relating.image(eii)), &basis_eij),
                );
            }
        }
    }

    for &b in algebra.basis() {
        if b.x() == b.y() {
            continue;
        }
        let eii = diag(b.x());
        let basis_eii = algebra.basis_element(eii);
        let basis_b = algebra.basis_element(b);
        let expansion = add(
            &add(
                &mul(outer.image(eii), &basis_b),
                &mul(&basis_eii, relating.image(b)),
            ),
            &add(
                &mul(outer.image(b), &basis_eii),
                &mul(&basis_b, relating.image(eii)),
            ),
        );
        report.check(
            vec![
                "off-diagonal-expansion".to_string(),
                pair_name(algebra, b),
                pair_name(algebra, eii),
            ],
            outer.image(b),
            &expansion,
        );
    }

    for i in 0..n {
        let eii = diag(i);
        let basis_eii = algebra.basis_element(eii);
        for &b in algebra.basis() {
            if b.x() == i || b.y() == i {
                continue;
            }
            let basis_b = algebra.basis_element(b);
            report.check_zero(
                vec![
                    "disjoint-annihilation".to_string(),
                    pair_name(algebra, b),
                    pair_name(algebra, eii),
                ],
                &add(&mul(outer.image(b), &basis_eii), &mul(&basis_b, relating.image(eii))),
            );
            report.check_zero(
                vec![
                    "disjoint-annihilation-reversed".to_string(),
                    pair_name(algebra, eii),
                    pair_name(algebra, b),
                ],
                &add(&mul(outer.image(eii), &basis_b), &mul(&basis_eii, relating.image(b))),
            );
        }
    }
    report
}

/// Evaluates the variant annihilation statement that uses the outer map on
/// both factors: `f(e_kj)e_ii + e_kj f(e_ii) = 0` and its reverse, over the
/// same index range as the disjoint-annihilation checks.
///
/// This variant is *not* a consequence of the pair identities: it can fail
/// on valid pairs whose outer and relating maps differ. It is provided for
/// observation, never asserted by the decomposition.
pub fn annihilator_outer_variant(pair: &GenPair) -> IdentityReport {
    let algebra = pair.algebra();
    let preorder = algebra.preorder();
    let outer = pair.outer();
    let mut report = IdentityReport::new("annihilator-outer-variant");
    let n = preorder.len() as u32;

    for i in 0..n {
        let eii = algebra.basis_index_ids(i, i).expect("reflexive");
        let basis_eii = algebra.basis_element(eii);
        for &b in algebra.basis() {
            if b.x() == i || b.y() == i {
                continue;
            }
            let basis_b = algebra.basis_element(b);
            report.check_zero(
                vec![
                    "variant".to_string(),
                    pair_name(algebra, b),
                    pair_name(algebra, eii),
                ],
                &add(&mul(outer.image(b), &basis_eii), &mul(&basis_b, outer.image(eii))),
            );
            report.check_zero(
                vec![
                    "variant-reversed".to_string(),
                    pair_name(algebra, eii),
                    pair_name(algebra, b),
                ],
                &add(&mul(outer.image(eii), &basis_b), &mul(&basis_eii, outer.image(b))),
            );
        }
    }
    report
}

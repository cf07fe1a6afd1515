//! Exact linear systems for derivation-type map classes.
//!
//! A linear map on an incidence algebra is determined by one scalar unknown
//! per (basis element, image component) pair. Each class of maps is cut out
//! by linear equations obtained from its defining identity instantiated on
//! basis elements: product instances for the plain classes, square instances
//! on every basis element plus their polarized forms on every pair for the
//! Jordan classes. By bilinearity those instance sets are equivalent to the
//! defining identities over all elements, so the nullspace of the system *is*
//! the space of maps in the class.
//!
//! Solving is restricted to fields and performed by exact reduced row
//! echelon form with positional pivoting (first usable row, lowest unknown
//! index), which makes solution bases reproducible bit for bit.

use serde::Serialize;

use crate::algebra::{GenPair, IncidenceAlgebra, LinearMap};
use crate::error::{Error, Result};
use crate::predicates;
use crate::ring::{RingSpec, Scalar};

/// The four supported map classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapClass {
    Derivation,
    JordanDerivation,
    GeneralizedDerivation,
    GeneralizedJordanDerivation,
}

impl MapClass {
    /// Parses the command-line class names `der`, `jder`, `gder`, `gjder`.
    pub fn parse(text: &str) -> Result<MapClass> {
        match text {
            "der" => Ok(MapClass::Derivation),
            "jder" => Ok(MapClass::JordanDerivation),
            "gder" => Ok(MapClass::GeneralizedDerivation),
            "gjder" => Ok(MapClass::GeneralizedJordanDerivation),
            other => Err(Error::Precondition {
                name: "class".to_string(),
                detail: format!("unknown class `{other}` (expected der, jder, gder, or gjder)"),
            }),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MapClass::Derivation => "der",
            MapClass::JordanDerivation => "jder",
            MapClass::GeneralizedDerivation => "gder",
            MapClass::GeneralizedJordanDerivation => "gjder",
        }
    }

    /// Whether members are (outer, relating) pairs rather than single maps.
    pub fn is_pair(self) -> bool {
        matches!(
            self,
            MapClass::GeneralizedDerivation | MapClass::GeneralizedJordanDerivation
        )
    }

    fn slots(self) -> usize {
        if self.is_pair() {
            2
        } else {
            1
        }
    }
}

type SparseRow = Vec<(usize, Scalar)>;

/// A homogeneous linear system over the algebra's ring whose solutions are
/// the coefficient vectors of maps in one class.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    algebra: IncidenceAlgebra,
    class: MapClass,
    unknown_count: usize,
    rows: Vec<SparseRow>,
}

impl ConstraintSystem {
    pub fn algebra(&self) -> &IncidenceAlgebra {
        &self.algebra
    }

    pub fn class(&self) -> MapClass {
        self.class
    }

    pub fn unknown_count(&self) -> usize {
        self.unknown_count
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Human-readable name of one unknown, for diagnostics.
    pub fn unknown_label(&self, unknown: usize) -> String {
        let dim = self.algebra.dimension();
        let slot = unknown / (dim * dim);
        let from = (unknown / dim) % dim;
        let at = unknown % dim;
        let slot_name = match (self.class.is_pair(), slot) {
            (false, _) => "map",
            (true, 0) => "outer",
            _ => "relating",
        };
        let (fx, fy) = self.algebra.label_pair(self.algebra.basis()[from]);
        let (ax, ay) = self.algebra.label_pair(self.algebra.basis()[at]);
        format!("{slot_name}[e({fx},{fy}) -> e({ax},{ay})]")
    }
}

/// Symbolic element: for each image component, a linear form in the unknowns.
type SymElement = std::collections::BTreeMap<usize, SparseRow>;

struct SystemBuilder<'a> {
    algebra: &'a IncidenceAlgebra,
    rows: Vec<SparseRow>,
}

impl<'a> SystemBuilder<'a> {
    fn new(algebra: &'a IncidenceAlgebra) -> Self {
        SystemBuilder {
            algebra,
            rows: Vec::new(),
        }
    }

    fn dim(&self) -> usize {
        self.algebra.dimension()
    }

    fn unknown(&self, slot: usize, from: usize, at: usize) -> usize {
        (slot * self.dim() + from) * self.dim() + at
    }

    /// The symbolic image of basis element `from` under the unknown map in
    /// `slot`: every component is a fresh unknown.
    fn image(&self, slot: usize, from: usize) -> SymElement {
        (0..self.dim())
            .map(|at| {
                (
                    at,
                    vec![(self.unknown(slot, from, at), Scalar::one(self.algebra.ring()))],
                )
            })
            .collect()
    }

    /// Symbolic product `sym · e(basis[right])` via the basis product rule.
    fn right_mul(&self, sym: &SymElement, right: usize) -> SymElement {
        let basis = self.algebra.basis();
        let b = basis[right];
        let mut out = SymElement::new();
        for (&at, form) in sym {
            let idx = basis[at];
            if idx.y() == b.x() {
                let target = self
                    .algebra
                    .basis_position(self.algebra.basis_index_ids(idx.x(), b.y()).expect("closed"));
                merge_into(out.entry(target).or_default(), form, false);
            }
        }
        out
    }

    /// Symbolic product `e(basis[left]) · sym`.
    fn left_mul(&self, left: usize, sym: &SymElement) -> SymElement {
        let basis = self.algebra.basis();
        let b = basis[left];
        let mut out = SymElement::new();
        for (&at, form) in sym {
            let idx = basis[at];
            if b.y() == idx.x() {
                let target = self
                    .algebra
                    .basis_position(self.algebra.basis_index_ids(b.x(), idx.y()).expect("closed"));
                merge_into(out.entry(target).or_default(), form, false);
            }
        }
        out
    }

    fn add(&self, mut a: SymElement, b: &SymElement) -> SymElement {
        for (&at, form) in b {
            merge_into(a.entry(at).or_default(), form, false);
        }
        a
    }

    fn sub(&self, mut a: SymElement, b: &SymElement) -> SymElement {
        for (&at, form) in b {
            merge_into(a.entry(at).or_default(), form, true);
        }
        a
    }

    /// Emits one equation per nonempty component of `lhs - rhs = 0`.
    fn equate(&mut self, lhs: SymElement, rhs: &SymElement) {
        let difference = self.sub(lhs, rhs);
        for (_, form) in difference {
            if !form.is_empty() {
                self.rows.push(form);
            }
        }
    }

    /// Product rule rows for the map in `slot`:
    /// `L(e_a e_b) = L(e_a) e_b + e_a L(e_b)` over all ordered basis pairs.
    fn product_rows(&mut self, slot: usize, relating_slot: usize) {
        let basis = self.algebra.basis().to_vec();
        for (apos, a) in basis.iter().enumerate() {
            for (bpos, b) in basis.iter().enumerate() {
                let lhs = if a.y() == b.x() {
                    let p = self.algebra.basis_position(
                        self.algebra
                            .basis_index_ids(a.x(), b.y())
                            .expect("closed under composition"),
                    );
                    self.image(slot, p)
                } else {
                    SymElement::new()
                };
                let rhs = self.add(
                    self.right_mul(&self.image(slot, apos), bpos),
                    &self.left_mul(apos, &self.image(relating_slot, bpos)),
                );
                self.equate(lhs, &rhs);
            }
        }
    }

    /// Square rows for the map in `slot`: the diagonal identity
    /// `L(e_a^2) = L(e_a) e_a + e_a L'(e_a)` on every basis element, plus its
    /// polarized form on every unordered pair. `relating_slot` supplies the
    /// map on the right factor (the same slot for the plain Jordan class).
    fn square_rows(&mut self, slot: usize, relating_slot: usize) {
        let basis = self.algebra.basis().to_vec();
        for (apos, a) in basis.iter().enumerate() {
            let lhs = if a.x() == a.y() {
                self.image(slot, apos)
            } else {
                SymElement::new()
            };
            let rhs = self.add(
                self.right_mul(&self.image(slot, apos), apos),
                &self.left_mul(apos, &self.image(relating_slot, apos)),
            );
            self.equate(lhs, &rhs);
        }
        for (apos, a) in basis.iter().enumerate() {
            for (bpos, b) in basis.iter().enumerate().skip(apos + 1) {
                let mut lhs = SymElement::new();
                if a.y() == b.x() {
                    let p = self.algebra.basis_position(
                        self.algebra.basis_index_ids(a.x(), b.y()).expect("closed"),
                    );
                    lhs = self.add(lhs, &self.image(slot, p));
                }
                if b.y() == a.x() {
                    let p = self.algebra.basis_position(
                        self.algebra.basis_index_ids(b.x(), a.y()).expect("closed"),
                    );
                    lhs = self.add(lhs, &self.image(slot, p));
                }
                let mut rhs = self.add(
                    self.right_mul(&self.image(slot, apos), bpos),
                    &self.left_mul(apos, &self.image(relating_slot, bpos)),
                );
                rhs = self.add(rhs, &self.right_mul(&self.image(slot, bpos), apos));
                rhs = self.add(rhs, &self.left_mul(bpos, &self.image(relating_slot, apos)));
                self.equate(lhs, &rhs);
            }
        }
    }
}

/// Merges `form` (negated when `negate`) into `target`, keeping it sorted by
/// unknown index and free of zero coefficients.
fn merge_into(target: &mut SparseRow, form: &SparseRow, negate: bool) {
    for (unknown, coefficient) in form {
        let coefficient = if negate {
            coefficient.neg()
        } else {
            coefficient.clone()
        };
        match target.binary_search_by_key(unknown, |&(u, _)| u) {
            Ok(pos) => {
                let merged = target[pos].1.add(&coefficient).expect("same ring");
                if merged.is_zero() {
                    target.remove(pos);
                } else {
                    target[pos].1 = merged;
                }
            }
            Err(pos) => target.insert(pos, (*unknown, coefficient)),
        }
    }
}

/// Builds the constraint system for one class over the algebra's ring.
pub fn build_system(algebra: &IncidenceAlgebra, class: MapClass) -> ConstraintSystem {
    let mut builder = SystemBuilder::new(algebra);
    match class {
        MapClass::Derivation => builder.product_rows(0, 0),
        MapClass::JordanDerivation => builder.square_rows(0, 0),
        MapClass::GeneralizedDerivation => {
            builder.product_rows(1, 1);
            builder.product_rows(0, 1);
        }
        MapClass::GeneralizedJordanDerivation => {
            builder.square_rows(1, 1);
            builder.square_rows(0, 1);
        }
    }
    let dim = algebra.dimension();
    ConstraintSystem {
        algebra: algebra.clone(),
        class,
        unknown_count: class.slots() * dim * dim,
        rows: builder.rows,
    }
}

fn row_coefficient(row: &SparseRow, column: usize) -> Option<usize> {
    row.binary_search_by_key(&column, |&(u, _)| u).ok()
}

/// Reduced row echelon form over a field with positional pivoting: for each
/// column in index order, the first remaining row with a nonzero entry
/// becomes the pivot. Returns the reduced rows and `(column, row)` pivots.
fn reduced_echelon(mut rows: Vec<SparseRow>, columns: usize) -> (Vec<SparseRow>, Vec<(usize, usize)>) {
    rows.retain(|r| !r.is_empty());
    let mut pivots = Vec::new();
    let mut processed = 0;
    for column in 0..columns {
        if processed == rows.len() {
            break;
        }
        let Some(found) = (processed..rows.len())
            .find(|&r| row_coefficient(&rows[r], column).is_some())
        else {
            continue;
        };
        rows.swap(processed, found);
        let pos = row_coefficient(&rows[processed], column).expect("pivot present");
        let inverse = rows[processed][pos].1.invert().expect("field element");
        for entry in &mut rows[processed] {
            entry.1 = entry.1.mul(&inverse).expect("same ring");
        }
        let pivot_row = rows[processed].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == processed {
                continue;
            }
            if let Some(pos) = row_coefficient(row, column) {
                let factor = row[pos].1.neg();
                let scaled: SparseRow = pivot_row
                    .iter()
                    .map(|(u, c)| (*u, c.mul(&factor).expect("same ring")))
                    .collect();
                merge_into(row, &scaled, false);
            }
        }
        pivots.push((column, processed));
        processed += 1;
    }
    (rows, pivots)
}

/// Rank of a set of sparse vectors over a field.
fn rank(rows: Vec<SparseRow>, columns: usize) -> usize {
    reduced_echelon(rows, columns).1.len()
}

/// A basis member of a solution space: a single map or an (outer, relating)
/// pair, depending on the class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassMember {
    Map(LinearMap),
    Pair(GenPair),
}

#[derive(Debug, Clone)]
enum SolutionBasis {
    Maps(Vec<LinearMap>),
    Pairs(Vec<GenPair>),
}

/// The solution space of a class system: a deterministic basis of maps or
/// pairs, each re-verified against the class predicate.
#[derive(Debug, Clone)]
pub struct SolutionSpace {
    algebra: IncidenceAlgebra,
    class: MapClass,
    basis: SolutionBasis,
}

impl SolutionSpace {
    pub fn algebra(&self) -> &IncidenceAlgebra {
        &self.algebra
    }

    pub fn class(&self) -> MapClass {
        self.class
    }

    pub fn dimension(&self) -> usize {
        match &self.basis {
            SolutionBasis::Maps(maps) => maps.len(),
            SolutionBasis::Pairs(pairs) => pairs.len(),
        }
    }

    pub fn maps(&self) -> Option<&[LinearMap]> {
        match &self.basis {
            SolutionBasis::Maps(maps) => Some(maps),
            SolutionBasis::Pairs(_) => None,
        }
    }

    pub fn pairs(&self) -> Option<&[GenPair]> {
        match &self.basis {
            SolutionBasis::Pairs(pairs) => Some(pairs),
            SolutionBasis::Maps(_) => None,
        }
    }

    pub fn members(&self) -> Vec<ClassMember> {
        match &self.basis {
            SolutionBasis::Maps(maps) => maps.iter().cloned().map(ClassMember::Map).collect(),
            SolutionBasis::Pairs(pairs) => pairs.iter().cloned().map(ClassMember::Pair).collect(),
        }
    }

    /// The linear combination of the basis with the given coefficients; a
    /// member of the class for every coefficient choice.
    pub fn sample(&self, coefficients: &[Scalar]) -> Result<ClassMember> {
        if coefficients.len() != self.dimension() {
            return Err(Error::CoefficientCount {
                expected: self.dimension(),
                got: coefficients.len(),
            });
        }
        match &self.basis {
            SolutionBasis::Maps(maps) => {
                let mut total = LinearMap::zero(&self.algebra);
                for (map, c) in maps.iter().zip(coefficients) {
                    total = total.add(&map.scale(c)?)?;
                }
                Ok(ClassMember::Map(total))
            }
            SolutionBasis::Pairs(pairs) => {
                let mut outer = LinearMap::zero(&self.algebra);
                let mut relating = LinearMap::zero(&self.algebra);
                for (pair, c) in pairs.iter().zip(coefficients) {
                    outer = outer.add(&pair.outer().scale(c)?)?;
                    relating = relating.add(&pair.relating().scale(c)?)?;
                }
                Ok(ClassMember::Pair(GenPair::new(outer, relating)?))
            }
        }
    }
}

fn vector_to_map(
    algebra: &IncidenceAlgebra,
    vector: &[Scalar],
    slot: usize,
) -> LinearMap {
    let dim = algebra.dimension();
    let images = algebra.basis().iter().enumerate().map(|(from, &b)| {
        let coefficients = algebra
            .basis()
            .iter()
            .enumerate()
            .map(|(at, &target)| (target, vector[(slot * dim + from) * dim + at].clone()));
        let image = algebra.element(coefficients).expect("validated indices");
        (b, image)
    });
    LinearMap::from_images(algebra, images).expect("validated images")
}

/// Solves a class system exactly over a field, returning a deterministic
/// basis of the solution space.
///
/// Every basis member is re-checked against the class predicate; a failure
/// there is a solver bug and aborts.
pub fn nullspace(system: &ConstraintSystem) -> Result<SolutionSpace> {
    let ring = system.algebra.ring();
    if !ring.is_field() {
        return Err(Error::NotAField(ring));
    }
    let columns = system.unknown_count;
    let (rows, pivots) = reduced_echelon(system.rows.clone(), columns);

    let pivot_columns: Vec<usize> = pivots.iter().map(|&(c, _)| c).collect();
    let mut vectors: Vec<Vec<Scalar>> = Vec::new();
    for free in 0..columns {
        if pivot_columns.binary_search(&free).is_ok() {
            continue;
        }
        let mut vector = vec![Scalar::zero(ring); columns];
        vector[free] = Scalar::one(ring);
        for &(pivot_column, row) in &pivots {
            if let Some(pos) = row_coefficient(&rows[row], free) {
                vector[pivot_column] = rows[row][pos].1.neg();
            }
        }
        vectors.push(vector);
    }

    let independence_rows: Vec<SparseRow> = vectors
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(u, c)| (u, c.clone()))
                .collect()
        })
        .collect();
    assert_eq!(
        rank(independence_rows, columns),
        vectors.len(),
        "nullspace basis must be linearly independent"
    );

    let basis = if system.class.is_pair() {
        let pairs: Vec<GenPair> = vectors
            .iter()
            .map(|v| {
                GenPair::new(
                    vector_to_map(&system.algebra, v, 0),
                    vector_to_map(&system.algebra, v, 1),
                )
                .expect("same algebra")
            })
            .collect();
        for pair in &pairs {
            let report = match system.class {
                MapClass::GeneralizedDerivation => predicates::is_generalized_derivation(pair),
                _ => predicates::is_generalized_jordan_derivation(pair),
            };
            assert!(
                report.passed,
                "solver produced a pair failing its class predicate ({}): {:?}",
                system.class.as_str(),
                report.witnesses.first()
            );
        }
        SolutionBasis::Pairs(pairs)
    } else {
        let maps: Vec<LinearMap> = vectors
            .iter()
            .map(|v| vector_to_map(&system.algebra, v, 0))
            .collect();
        for map in &maps {
            let report = match system.class {
                MapClass::Derivation => predicates::is_derivation(map),
                _ => predicates::is_jordan_derivation(map),
            };
            assert!(
                report.passed,
                "solver produced a map failing its class predicate ({}): {:?}",
                system.class.as_str(),
                report.witnesses.first()
            );
        }
        SolutionBasis::Maps(maps)
    };

    Ok(SolutionSpace {
        algebra: system.algebra.clone(),
        class: system.class,
        basis,
    })
}

/// Dimension of the image of a pair space under projection onto the outer
/// map, computed as the rank of the projected basis.
fn outer_projection_dimension(space: &SolutionSpace) -> usize {
    let Some(pairs) = space.pairs() else {
        return space.dimension();
    };
    let algebra = space.algebra();
    let dim = algebra.dimension();
    let rows: Vec<SparseRow> = pairs
        .iter()
        .map(|pair| {
            let mut row = SparseRow::new();
            for (from, &b) in algebra.basis().iter().enumerate() {
                for (at, &target) in algebra.basis().iter().enumerate() {
                    let c = pair.outer().image(b).coefficient(target);
                    if !c.is_zero() {
                        row.push((from * dim + at, c));
                    }
                }
            }
            row.sort_by_key(|&(u, _)| u);
            row
        })
        .collect();
    rank(rows, dim * dim)
}

/// Dimensions of all four class spaces over one algebra, with the structural
/// comparisons between them.
#[derive(Debug, Clone, Serialize)]
pub struct SpaceComparison {
    pub ring: String,
    pub two_torsion_free: bool,
    pub algebra_dimension: usize,
    pub derivation_dim: usize,
    pub jordan_dim: usize,
    pub generalized_pair_dim: usize,
    pub generalized_jordan_pair_dim: usize,
    pub generalized_outer_dim: usize,
    pub generalized_jordan_outer_dim: usize,
    pub jordan_equals_derivation: bool,
    pub outer_projections_equal: bool,
    pub pair_dim_splits: bool,
}

/// All four solved spaces plus their comparison.
#[derive(Debug, Clone)]
pub struct SpaceSurvey {
    pub derivation: SolutionSpace,
    pub jordan: SolutionSpace,
    pub generalized: SolutionSpace,
    pub generalized_jordan: SolutionSpace,
    pub comparison: SpaceComparison,
}

/// Solves every class over the algebra and compares the dimensions.
pub fn survey_spaces(algebra: &IncidenceAlgebra) -> Result<SpaceSurvey> {
    let derivation = nullspace(&build_system(algebra, MapClass::Derivation))?;
    let jordan = nullspace(&build_system(algebra, MapClass::JordanDerivation))?;
    let generalized = nullspace(&build_system(algebra, MapClass::GeneralizedDerivation))?;
    let generalized_jordan =
        nullspace(&build_system(algebra, MapClass::GeneralizedJordanDerivation))?;

    let generalized_outer_dim = outer_projection_dimension(&generalized);
    let generalized_jordan_outer_dim = outer_projection_dimension(&generalized_jordan);
    let comparison = SpaceComparison {
        ring: algebra.ring().to_string(),
        two_torsion_free: algebra.ring().is_two_torsion_free(),
        algebra_dimension: algebra.dimension(),
        derivation_dim: derivation.dimension(),
        jordan_dim: jordan.dimension(),
        generalized_pair_dim: generalized.dimension(),
        generalized_jordan_pair_dim: generalized_jordan.dimension(),
        generalized_outer_dim,
        generalized_jordan_outer_dim,
        jordan_equals_derivation: jordan.dimension() == derivation.dimension(),
        outer_projections_equal: generalized_outer_dim == generalized_jordan_outer_dim,
        pair_dim_splits: generalized.dimension()
            == algebra.dimension() + derivation.dimension(),
    };
    Ok(SpaceSurvey {
        derivation,
        jordan,
        generalized,
        generalized_jordan,
        comparison,
    })
}

/// Convenience wrapper returning only the comparison.
pub fn compare_spaces(algebra: &IncidenceAlgebra) -> Result<SpaceComparison> {
    Ok(survey_spaces(algebra)?.comparison)
}

/// Seeded coefficient vectors for sampling solution spaces: small fractions
/// over `Q`, small integers over `Z`, uniform residues over `Z/n`.
pub fn random_coefficients<R: rand::Rng>(
    ring: RingSpec,
    count: usize,
    rng: &mut R,
) -> Vec<Scalar> {
    (0..count)
        .map(|_| match ring {
            RingSpec::Integers => Scalar::from_i64(ring, rng.random_range(-9..=9)),
            RingSpec::Rationals => {
                let numerator: i64 = rng.random_range(-9..=9);
                let denominator: i64 = rng.random_range(1..=4);
                Scalar::parse(ring, &format!("{numerator}/{denominator}")).expect("valid fraction")
            }
            RingSpec::ModN(n) => {
                let r = rng.random_range(0..n);
                Scalar::parse(ring, &r.to_string()).expect("valid residue")
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preorder::Preorder;

    fn algebra(labels: &[&str], pairs: &[(&str, &str)], ring: RingSpec) -> IncidenceAlgebra {
        IncidenceAlgebra::new(Preorder::closure(labels, pairs).unwrap(), ring)
    }

    fn two_chain(ring: RingSpec) -> IncidenceAlgebra {
        algebra(&["1", "2"], &[("1", "2")], ring)
    }

    #[test]
    fn unknown_counts() {
        let a = two_chain(RingSpec::Rationals);
        assert_eq!(build_system(&a, MapClass::Derivation).unknown_count(), 9);
        assert_eq!(
            build_system(&a, MapClass::GeneralizedDerivation).unknown_count(),
            18
        );
    }

    #[test]
    fn one_point_systems_have_trivial_solutions() {
        for ring in [RingSpec::Rationals, RingSpec::ModN(2)] {
            let a = algebra(&["x"], &[], ring);
            let space = nullspace(&build_system(&a, MapClass::Derivation)).unwrap();
            assert_eq!(space.dimension(), 0, "ring {ring}");
        }
    }

    #[test]
    fn two_chain_derivation_space_has_dimension_two() {
        let a = two_chain(RingSpec::Rationals);
        let space = nullspace(&build_system(&a, MapClass::Derivation)).unwrap();
        assert_eq!(space.dimension(), 2);
        for map in space.maps().unwrap() {
            assert!(predicates::is_derivation(map).passed);
        }
    }

    #[test]
    fn antichain_derivation_space_is_trivial() {
        let a = algebra(&["a", "b"], &[], RingSpec::Rationals);
        let space = nullspace(&build_system(&a, MapClass::Derivation)).unwrap();
        assert_eq!(space.dimension(), 0);
    }

    #[test]
    fn two_chain_generalized_space_has_dimension_five() {
        let a = two_chain(RingSpec::Rationals);
        let space = nullspace(&build_system(&a, MapClass::GeneralizedDerivation)).unwrap();
        assert_eq!(space.dimension(), 5);
        let jordan = nullspace(&build_system(&a, MapClass::GeneralizedJordanDerivation)).unwrap();
        assert_eq!(jordan.dimension(), 5);
    }

    #[test]
    fn two_cycle_derivation_space_has_dimension_three() {
        let a = algebra(&["a", "b"], &[("a", "b"), ("b", "a")], RingSpec::Rationals);
        let space = nullspace(&build_system(&a, MapClass::Derivation)).unwrap();
        assert_eq!(space.dimension(), 3);
        let jordan = nullspace(&build_system(&a, MapClass::JordanDerivation)).unwrap();
        assert_eq!(jordan.dimension(), 3);
    }

    #[test]
    fn survey_on_two_chain_over_rationals() {
        let survey = survey_spaces(&two_chain(RingSpec::Rationals)).unwrap();
        let c = &survey.comparison;
        assert_eq!(c.derivation_dim, 2);
        assert_eq!(c.jordan_dim, 2);
        assert_eq!(c.generalized_pair_dim, 5);
        assert_eq!(c.generalized_outer_dim, 5);
        assert!(c.jordan_equals_derivation);
        assert!(c.outer_projections_equal);
        assert!(c.pair_dim_splits);
    }

    #[test]
    fn solving_requires_a_field() {
        let a = two_chain(RingSpec::Integers);
        assert!(matches!(
            nullspace(&build_system(&a, MapClass::Derivation)),
            Err(Error::NotAField(RingSpec::Integers))
        ));
        let b = two_chain(RingSpec::ModN(6));
        assert!(matches!(
            nullspace(&build_system(&b, MapClass::Derivation)),
            Err(Error::NotAField(RingSpec::ModN(6)))
        ));
    }

    #[test]
    fn solutions_are_deterministic() {
        let a = two_chain(RingSpec::ModN(5));
        let first = nullspace(&build_system(&a, MapClass::GeneralizedJordanDerivation)).unwrap();
        let second = nullspace(&build_system(&a, MapClass::GeneralizedJordanDerivation)).unwrap();
        assert_eq!(first.dimension(), second.dimension());
        assert_eq!(first.pairs().unwrap(), second.pairs().unwrap());
    }

    #[test]
    fn sampling_needs_matching_coefficient_count() {
        let a = two_chain(RingSpec::Rationals);
        let space = nullspace(&build_system(&a, MapClass::Derivation)).unwrap();
        let short = vec![Scalar::one(RingSpec::Rationals)];
        assert!(matches!(
            space.sample(&short),
            Err(Error::CoefficientCount {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn sampled_members_stay_in_class() {
        use rand::SeedableRng;
        let a = two_chain(RingSpec::Rationals);
        let space = nullspace(&build_system(&a, MapClass::GeneralizedJordanDerivation)).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        for _ in 0..5 {
            let coefficients = random_coefficients(RingSpec::Rationals, space.dimension(), &mut rng);
            let ClassMember::Pair(pair) = space.sample(&coefficients).unwrap() else {
                panic!("pair class samples pairs");
            };
            assert!(predicates::is_generalized_jordan_derivation(&pair).passed);
        }
    }

    #[test]
    fn empty_poset_solves_trivially() {
        let a = algebra(&[] as &[&str], &[], RingSpec::Rationals);
        let space = nullspace(&build_system(&a, MapClass::GeneralizedJordanDerivation)).unwrap();
        assert_eq!(space.dimension(), 0);
    }

    #[test]
    fn unknown_labels_name_slot_and_images() {
        let a = two_chain(RingSpec::Rationals);
        let system = build_system(&a, MapClass::GeneralizedDerivation);
        assert_eq!(system.unknown_label(0), "outer[e(1,1) -> e(1,1)]");
        assert_eq!(system.unknown_label(9), "relating[e(1,1) -> e(1,1)]");
        let single = build_system(&a, MapClass::Derivation);
        assert_eq!(single.unknown_label(4), "map[e(1,2) -> e(1,2)]");
    }

    #[test]
    fn class_names_parse_and_roundtrip() {
        for class in [
            MapClass::Derivation,
            MapClass::JordanDerivation,
            MapClass::GeneralizedDerivation,
            MapClass::GeneralizedJordanDerivation,
        ] {
            assert_eq!(MapClass::parse(class.as_str()).unwrap(), class);
        }
        assert!(MapClass::parse("nope").is_err());
    }
}

//! The incidence algebra of a finite preorder over an exact ring.
//!
//! Elements assign a scalar to each comparable pair `(x, y)` of the preorder.
//! The product is convolution: `(fg)(x, y)` sums `f(x, z)·g(z, y)` over the
//! interval `x <= z <= y`. On the basis `e(x,y)` (the indicator of one
//! comparable pair) this reduces to `e(x,y)·e(u,v) = [y = u]·e(x,v)`, which is
//! how [`IncidenceElement::convolve`] computes it. The Kronecker delta
//! `e(x,x)` summed over all `x` is the two-sided identity, for preorders with
//! cycles just as for partial orders.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::preorder::Preorder;
use crate::ring::{RingSpec, Scalar};

/// A comparable pair `(x, y)` of a fixed preorder, identifying one basis
/// element `e(x,y)` of its incidence algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    x: u32,
    y: u32,
}

impl BasisIndex {
    pub fn x(&self) -> u32 {
        self.x
    }

    pub fn y(&self) -> u32 {
        self.y
    }
}

#[derive(Debug)]
struct AlgebraData {
    preorder: Preorder,
    ring: RingSpec,
    basis: Vec<BasisIndex>,
    position: BTreeMap<BasisIndex, usize>,
}

/// The incidence algebra `I(X, R)` of a preorder `X` over a ring `R`.
///
/// Cheap to clone; all elements and maps hold a shared handle to it.
#[derive(Debug, Clone)]
pub struct IncidenceAlgebra {
    data: Arc<AlgebraData>,
}

impl IncidenceAlgebra {
    pub fn new(preorder: Preorder, ring: RingSpec) -> Self {
        let basis: Vec<BasisIndex> = preorder
            .comparable_pairs()
            .into_iter()
            .map(|(x, y)| BasisIndex { x, y })
            .collect();
        let position = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        IncidenceAlgebra {
            data: Arc::new(AlgebraData {
                preorder,
                ring,
                basis,
                position,
            }),
        }
    }

    pub fn preorder(&self) -> &Preorder {
        &self.data.preorder
    }

    pub fn ring(&self) -> RingSpec {
        self.data.ring
    }

    /// The basis `e(x,y)`, one index per comparable pair, in lexicographic
    /// order of element ids. Its length is the algebra's dimension as a free
    /// module.
    pub fn basis(&self) -> &[BasisIndex] {
        &self.data.basis
    }

    pub fn dimension(&self) -> usize {
        self.data.basis.len()
    }

    /// Resolves labels to a basis index, requiring `x <= y`.
    pub fn basis_index(&self, x: &str, y: &str) -> Result<BasisIndex> {
        let p = self.preorder();
        self.basis_index_ids(p.id(x)?, p.id(y)?)
    }

    pub fn basis_index_ids(&self, x: u32, y: u32) -> Result<BasisIndex> {
        if !self.preorder().leq_ids(x, y) {
            return Err(Error::NotComparable(
                self.preorder().label(x).to_string(),
                self.preorder().label(y).to_string(),
            ));
        }
        Ok(BasisIndex { x, y })
    }

    /// Position of a basis index in [`IncidenceAlgebra::basis`].
    pub fn basis_position(&self, index: BasisIndex) -> usize {
        self.data.position[&index]
    }

    pub fn label_pair(&self, index: BasisIndex) -> (&str, &str) {
        let p = self.preorder();
        (p.label(index.x), p.label(index.y))
    }

    pub fn same(&self, other: &IncidenceAlgebra) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.ring == other.data.ring && self.data.preorder == other.data.preorder)
    }

    pub fn zero(&self) -> IncidenceElement {
        IncidenceElement {
            algebra: self.clone(),
            support: BTreeMap::new(),
        }
    }

    /// The Kronecker delta: coefficient 1 on every pair `(x, x)`, the
    /// two-sided identity of the algebra.
    pub fn identity(&self) -> IncidenceElement {
        let mut support = BTreeMap::new();
        for x in 0..self.preorder().len() as u32 {
            support.insert(BasisIndex { x, y: x }, Scalar::one(self.ring()));
        }
        IncidenceElement {
            algebra: self.clone(),
            support,
        }
    }

    pub fn basis_element(&self, index: BasisIndex) -> IncidenceElement {
        let mut support = BTreeMap::new();
        support.insert(index, Scalar::one(self.ring()));
        IncidenceElement {
            algebra: self.clone(),
            support,
        }
    }

    /// Builds an element from `(index, coefficient)` pairs, accumulating
    /// repeats and dropping zeros.
    pub fn element<I>(&self, coefficients: I) -> Result<IncidenceElement>
    where
        I: IntoIterator<Item = (BasisIndex, Scalar)>,
    {
        let mut support: BTreeMap<BasisIndex, Scalar> = BTreeMap::new();
        for (index, coefficient) in coefficients {
            if coefficient.ring() != self.ring() {
                return Err(Error::RingMismatch(self.ring(), coefficient.ring()));
            }
            if !self.data.position.contains_key(&index) {
                return Err(Error::NotComparable(
                    self.preorder().label(index.x).to_string(),
                    self.preorder().label(index.y).to_string(),
                ));
            }
            let entry = match support.remove(&index) {
                Some(existing) => existing.add(&coefficient)?,
                None => coefficient,
            };
            if !entry.is_zero() {
                support.insert(index, entry);
            }
        }
        Ok(IncidenceElement {
            algebra: self.clone(),
            support,
        })
    }

    /// Convenience constructor from `(from-label, to-label, coefficient)`
    /// string triples.
    pub fn element_parsed(&self, triples: &[(&str, &str, &str)]) -> Result<IncidenceElement> {
        let mut coefficients = Vec::new();
        for (x, y, c) in triples {
            coefficients.push((self.basis_index(x, y)?, Scalar::parse(self.ring(), c)?));
        }
        self.element(coefficients)
    }
}

impl PartialEq for IncidenceAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for IncidenceAlgebra {}

/// An element of an incidence algebra: finitely many scalars indexed by
/// comparable pairs, zeros never stored.
#[derive(Debug, Clone)]
pub struct IncidenceElement {
    algebra: IncidenceAlgebra,
    support: BTreeMap<BasisIndex, Scalar>,
}

impl IncidenceElement {
    pub fn algebra(&self) -> &IncidenceAlgebra {
        &self.algebra
    }

    /// Nonzero coefficients in basis-index order.
    pub fn support(&self) -> impl Iterator<Item = (BasisIndex, &Scalar)> {
        self.support.iter().map(|(&i, c)| (i, c))
    }

    pub fn coefficient(&self, index: BasisIndex) -> Scalar {
        self.support
            .get(&index)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.algebra.ring()))
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    fn check_algebra(&self, rhs: &IncidenceElement) -> Result<()> {
        if self.algebra.same(&rhs.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, rhs: &IncidenceElement) -> Result<IncidenceElement> {
        self.check_algebra(rhs)?;
        let mut support = self.support.clone();
        for (&index, coefficient) in &rhs.support {
            let entry = match support.remove(&index) {
                Some(existing) => existing.add(coefficient)?,
                None => coefficient.clone(),
            };
            if !entry.is_zero() {
                support.insert(index, entry);
            }
        }
        Ok(IncidenceElement {
            algebra: self.algebra.clone(),
            support,
        })
    }

    pub fn neg(&self) -> IncidenceElement {
        let support = self
            .support
            .iter()
            .map(|(&i, c)| (i, c.neg()))
            .collect();
        IncidenceElement {
            algebra: self.algebra.clone(),
            support,
        }
    }

    pub fn sub(&self, rhs: &IncidenceElement) -> Result<IncidenceElement> {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, factor: &Scalar) -> Result<IncidenceElement> {
        if factor.ring() != self.algebra.ring() {
            return Err(Error::RingMismatch(self.algebra.ring(), factor.ring()));
        }
        let mut support = BTreeMap::new();
        for (&index, coefficient) in &self.support {
            let scaled = coefficient.mul(factor)?;
            if !scaled.is_zero() {
                support.insert(index, scaled);
            }
        }
        Ok(IncidenceElement {
            algebra: self.algebra.clone(),
            support,
        })
    }

    /// Convolution product, computed through the basis product rule
    /// `e(x,z)·e(u,v) = [z = u]·e(x,v)`.
    pub fn convolve(&self, rhs: &IncidenceElement) -> Result<IncidenceElement> {
        self.check_algebra(rhs)?;
        let mut support: BTreeMap<BasisIndex, Scalar> = BTreeMap::new();
        for (&left, a) in &self.support {
            for (&right, b) in &rhs.support {
                if left.y != right.x {
                    continue;
                }
                let index = BasisIndex {
                    x: left.x,
                    y: right.y,
                };
                debug_assert!(self.algebra.preorder().leq_ids(index.x, index.y));
                let term = a.mul(b)?;
                let entry = match support.remove(&index) {
                    Some(existing) => existing.add(&term)?,
                    None => term,
                };
                if !entry.is_zero() {
                    support.insert(index, entry);
                }
            }
        }
        Ok(IncidenceElement {
            algebra: self.algebra.clone(),
            support,
        })
    }

    /// Rendering like `1·e(1,2) + 3·e(2,2)`, used in witness reports.
    pub fn render(&self) -> String {
        if self.support.is_empty() {
            return "0".to_string();
        }
        self.support
            .iter()
            .map(|(&index, coefficient)| {
                let (x, y) = self.algebra.label_pair(index);
                format!("{coefficient}·e({x},{y})")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl PartialEq for IncidenceElement {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same(&other.algebra) && self.support == other.support
    }
}

impl Eq for IncidenceElement {}

impl fmt::Display for IncidenceElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A linear map on an incidence algebra, stored by its images of every basis
/// element.
#[derive(Debug, Clone)]
pub struct LinearMap {
    algebra: IncidenceAlgebra,
    images: BTreeMap<BasisIndex, IncidenceElement>,
}

impl LinearMap {
    pub fn zero(algebra: &IncidenceAlgebra) -> LinearMap {
        let images = algebra
            .basis()
            .iter()
            .map(|&b| (b, algebra.zero()))
            .collect();
        LinearMap {
            algebra: algebra.clone(),
            images,
        }
    }

    /// Builds a map from the given images; basis indices without an entry get
    /// image zero.
    pub fn from_images<I>(algebra: &IncidenceAlgebra, images: I) -> Result<LinearMap>
    where
        I: IntoIterator<Item = (BasisIndex, IncidenceElement)>,
    {
        let mut map = LinearMap::zero(algebra);
        for (index, image) in images {
            if !image.algebra.same(algebra) {
                return Err(Error::AlgebraMismatch);
            }
            match map.images.get_mut(&index) {
                Some(slot) => *slot = image,
                None => {
                    return Err(Error::NotComparable(
                        algebra.preorder().label(index.x).to_string(),
                        algebra.preorder().label(index.y).to_string(),
                    ))
                }
            }
        }
        Ok(map)
    }

    pub fn algebra(&self) -> &IncidenceAlgebra {
        &self.algebra
    }

    pub fn image(&self, index: BasisIndex) -> &IncidenceElement {
        &self.images[&index]
    }

    /// Extends the map linearly: `apply(Σ c·e(x,y)) = Σ c·image(e(x,y))`.
    pub fn apply(&self, a: &IncidenceElement) -> Result<IncidenceElement> {
        if !a.algebra().same(&self.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = self.algebra.zero();
        for (index, coefficient) in a.support() {
            out = out.add(&self.images[&index].scale(coefficient)?)?;
        }
        Ok(out)
    }

    /// The map `a -> c·a`.
    pub fn left_multiplication(c: &IncidenceElement) -> LinearMap {
        let algebra = c.algebra().clone();
        let images = algebra
            .basis()
            .iter()
            .map(|&b| {
                let image = c
                    .convolve(&algebra.basis_element(b))
                    .expect("same algebra");
                (b, image)
            })
            .collect();
        LinearMap { algebra, images }
    }

    /// The commutator map `a -> f·a - a·f`, a derivation for every `f`.
    pub fn inner(f: &IncidenceElement) -> LinearMap {
        let algebra = f.algebra().clone();
        let images = algebra
            .basis()
            .iter()
            .map(|&b| {
                let e = algebra.basis_element(b);
                let image = f
                    .convolve(&e)
                    .and_then(|fe| fe.sub(&e.convolve(f)?))
                    .expect("same algebra");
                (b, image)
            })
            .collect();
        LinearMap { algebra, images }
    }

    pub fn add(&self, rhs: &LinearMap) -> Result<LinearMap> {
        if !self.algebra.same(&rhs.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let mut images = BTreeMap::new();
        for (&index, image) in &self.images {
            images.insert(index, image.add(&rhs.images[&index])?);
        }
        Ok(LinearMap {
            algebra: self.algebra.clone(),
            images,
        })
    }

    pub fn sub(&self, rhs: &LinearMap) -> Result<LinearMap> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> LinearMap {
        let images = self.images.iter().map(|(&i, im)| (i, im.neg())).collect();
        LinearMap {
            algebra: self.algebra.clone(),
            images,
        }
    }

    pub fn scale(&self, factor: &Scalar) -> Result<LinearMap> {
        let mut images = BTreeMap::new();
        for (&index, image) in &self.images {
            images.insert(index, image.scale(factor)?);
        }
        Ok(LinearMap {
            algebra: self.algebra.clone(),
            images,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.images.values().all(IncidenceElement::is_zero)
    }
}

impl PartialEq for LinearMap {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same(&other.algebra) && self.images == other.images
    }
}

impl Eq for LinearMap {}

/// A pair of linear maps `(outer, relating)` subject to a generalized
/// derivation-type constraint tying the two together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenPair {
    outer: LinearMap,
    relating: LinearMap,
}

impl GenPair {
    pub fn new(outer: LinearMap, relating: LinearMap) -> Result<GenPair> {
        if !outer.algebra().same(relating.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(GenPair { outer, relating })
    }

    pub fn algebra(&self) -> &IncidenceAlgebra {
        self.outer.algebra()
    }

    pub fn outer(&self) -> &LinearMap {
        &self.outer
    }

    pub fn relating(&self) -> &LinearMap {
        &self.relating
    }
}

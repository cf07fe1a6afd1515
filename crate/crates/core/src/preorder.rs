//! Finite preorders: reflexive, transitive relations on a finite label set.
//!
//! A [`Preorder`] is always stored closed. Construction takes a generating
//! relation and computes the reflexive-transitive closure, so cycles are
//! legal: two elements `x`, `y` with `x <= y <= x` are *equivalent* without
//! being equal. A preorder is a partial order exactly when no such pair of
//! distinct elements exists.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A finite preorder over string labels, stored as a closed relation matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Preorder {
    labels: Vec<String>,
    index: BTreeMap<String, u32>,
    leq: Vec<bool>,
}

impl Preorder {
    /// Builds the preorder generated by `pairs` on `elements`: the smallest
    /// reflexive, transitive relation containing every pair. The closure is
    /// computed by iterating `x <= y <= z  =>  x <= z` to a fixpoint.
    pub fn closure<E: AsRef<str>, P: AsRef<str>>(
        elements: &[E],
        pairs: &[(P, P)],
    ) -> Result<Preorder> {
        let labels: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        let mut index = BTreeMap::new();
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i as u32).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }

        let n = labels.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (x, y) in pairs {
            let xi = *index
                .get(x.as_ref())
                .ok_or_else(|| Error::UnknownLabel(x.as_ref().to_string()))?;
            let yi = *index
                .get(y.as_ref())
                .ok_or_else(|| Error::UnknownLabel(y.as_ref().to_string()))?;
            leq[xi as usize * n + yi as usize] = true;
        }

        let mut changed = true;
        while changed {
            changed = false;
            for x in 0..n {
                for z in 0..n {
                    if !leq[x * n + z] {
                        continue;
                    }
                    for y in 0..n {
                        if leq[z * n + y] && !leq[x * n + y] {
                            leq[x * n + y] = true;
                            changed = true;
                        }
                    }
                }
            }
        }

        Ok(Preorder { labels, index, leq })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Element labels in their fixed enumeration order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id(&self, label: &str) -> Result<u32> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn label(&self, id: u32) -> &str {
        &self.labels[id as usize]
    }

    pub fn leq_ids(&self, x: u32, y: u32) -> bool {
        self.leq[x as usize * self.labels.len() + y as usize]
    }

    pub fn leq(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.leq_ids(self.id(x)?, self.id(y)?))
    }

    pub fn equivalent_ids(&self, x: u32, y: u32) -> bool {
        self.leq_ids(x, y) && self.leq_ids(y, x)
    }

    /// Whether `x <= y` and `y <= x`.
    pub fn equivalent(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.equivalent_ids(self.id(x)?, self.id(y)?))
    }

    /// Elements `z` with `x <= z <= y`, in enumeration order; empty when
    /// `x <= y` fails.
    pub fn interval(&self, x: &str, y: &str) -> Result<Vec<&str>> {
        let xi = self.id(x)?;
        let yi = self.id(y)?;
        if !self.leq_ids(xi, yi) {
            return Ok(Vec::new());
        }
        Ok((0..self.labels.len() as u32)
            .filter(|&z| self.leq_ids(xi, z) && self.leq_ids(z, yi))
            .map(|z| self.label(z))
            .collect())
    }

    /// Elements strictly below `i`: `x <= i` with `x` not equivalent to `i`.
    pub fn strict_down_set(&self, i: &str) -> Result<Vec<&str>> {
        let ii = self.id(i)?;
        Ok((0..self.labels.len() as u32)
            .filter(|&x| self.leq_ids(x, ii) && !self.leq_ids(ii, x))
            .map(|x| self.label(x))
            .collect())
    }

    /// Elements strictly above `j`: `j <= y` with `y` not equivalent to `j`.
    pub fn strict_up_set(&self, j: &str) -> Result<Vec<&str>> {
        let jj = self.id(j)?;
        Ok((0..self.labels.len() as u32)
            .filter(|&y| self.leq_ids(jj, y) && !self.leq_ids(y, jj))
            .map(|y| self.label(y))
            .collect())
    }

    /// Whether the preorder is antisymmetric, i.e. has no two distinct
    /// equivalent elements.
    pub fn is_partial_order(&self) -> bool {
        let n = self.labels.len() as u32;
        (0..n).all(|x| (x + 1..n).all(|y| !self.equivalent_ids(x, y)))
    }

    /// All comparable pairs `(x, y)` with `x <= y`, in lexicographic id order.
    pub fn comparable_pairs(&self) -> Vec<(u32, u32)> {
        let n = self.labels.len() as u32;
        let mut pairs = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.leq_ids(x, y) {
                    pairs.push((x, y));
                }
            }
        }
        pairs
    }

    /// The full relation as labeled pairs, reflexive pairs included. Feeding
    /// these back through [`Preorder::closure`] reproduces the preorder.
    pub fn relation_pairs(&self) -> Vec<(&str, &str)> {
        self.comparable_pairs()
            .into_iter()
            .map(|(x, y)| (self.label(x), self.label(y)))
            .collect()
    }
}

//! Shared builders for the benchmark suite.

use incalg_core::solver::random_coefficients;
use incalg_core::{IncidenceAlgebra, IncidenceElement, Preorder, RingSpec};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The incidence algebra of a linear order on `n` elements.
pub fn chain(n: usize, ring: RingSpec) -> IncidenceAlgebra {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let pairs: Vec<(String, String)> = labels
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect();
    let preorder = Preorder::closure(&labels, &pairs).expect("chain labels are distinct");
    IncidenceAlgebra::new(preorder, ring)
}

/// A fully supported element with small seeded coefficients.
pub fn dense_element(algebra: &IncidenceAlgebra, seed: u64) -> IncidenceElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coefficients = random_coefficients(algebra.ring(), algebra.dimension(), &mut rng);
    algebra
        .element(algebra.basis().iter().copied().zip(coefficients))
        .expect("basis coefficients are valid")
}

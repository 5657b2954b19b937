//! Seeded generator of random metric Lie algebras, shared by the
//! integration tests.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sasaki::kernel::rat::{int, Rat};
use sasaki::manifold::{FrameManifold, ManifoldData, ManifoldError};

/// Sparse random brackets `[e_i, e_j] = sum c e_k` with small integer
/// coefficients and a random positive definite metric `L L^T`.
pub fn candidate(rng: &mut ChaCha8Rng, dim: usize) -> Result<FrameManifold, ManifoldError> {
    let mut c = vec![vec![vec![int(0); dim]; dim]; dim];
    let entries = rng.gen_range(1..=4);
    for _ in 0..entries {
        let mut pair: Vec<usize> = (0..dim).collect();
        pair.shuffle(rng);
        let (i, j) = (pair[0], pair[1]);
        let k = rng.gen_range(0..dim);
        let v = int(*[-2i64, -1, 1, 2].choose(rng).unwrap());
        c[k][i][j] = v.clone();
        c[k][j][i] = -v;
    }
    let mut l = vec![vec![int(0); dim]; dim];
    for (i, row) in l.iter_mut().enumerate() {
        row[i] = int(rng.gen_range(1..=2));
        for entry in row.iter_mut().take(i) {
            *entry = int(rng.gen_range(-1..=1));
        }
    }
    let metric: Vec<Vec<Rat>> = (0..dim)
        .map(|i| (0..dim).map(|j| (0..dim).map(|k| &l[i][k] * &l[j][k]).sum()).collect())
        .collect();
    let mut xi = vec![int(0); dim];
    xi[0] = int(1);
    FrameManifold::new(ManifoldData {
        name: "random".into(),
        dim,
        brackets: c,
        metric: Some(metric),
        phi: vec![vec![int(0); dim]; dim],
        xi,
        eta: None,
    })
}

/// `count` valid algebras, alternating between dimensions 3 and 5.
/// Candidates failing the Jacobi identity are discarded.
pub fn random_algebras(seed: u64, count: usize) -> Vec<FrameManifold> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut rejected = 0usize;
    while out.len() < count {
        let dim = if out.len() % 2 == 0 { 3 } else { 5 };
        match candidate(&mut rng, dim) {
            Ok(m) => out.push(m),
            Err(ManifoldError::Jacobi { .. }) => rejected += 1,
            Err(e) => panic!("generator produced invalid data: {e}"),
        }
        assert!(rejected < 100_000, "Jacobi filter rejects everything");
    }
    out
}

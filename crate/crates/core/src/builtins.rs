//! Built-in example manifolds.

use crate::kernel::rat::{int, Rat};
use crate::manifold::{FrameManifold, ManifoldData, ManifoldDocument};

pub const NAMES: [&str; 4] = ["heisenberg5", "sphere3", "abelian5", "heisenberg3"];

/// Structure constants from `(i, j, k, c)` meaning `[e_i, e_j] += c e_k`
/// (1-based).
fn brackets(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Vec<Vec<Vec<Rat>>> {
    let mut c = vec![vec![vec![int(0); dim]; dim]; dim];
    for &(i, j, k, v) in entries {
        c[k - 1][i - 1][j - 1] = int(v);
        c[k - 1][j - 1][i - 1] = int(-v);
    }
    c
}

/// `phi` from the images `phi(e_j)`, given as `(j, k, c)` meaning
/// `phi(e_j) += c e_k`.
fn phi(dim: usize, entries: &[(usize, usize, i64)]) -> Vec<Vec<Rat>> {
    let mut p = vec![vec![int(0); dim]; dim];
    for &(j, k, v) in entries {
        p[k - 1][j - 1] = int(v);
    }
    p
}

fn unit(dim: usize, i: usize) -> Vec<Rat> {
    (0..dim).map(|k| int((k + 1 == i) as i64)).collect()
}

pub fn data(name: &str) -> Option<ManifoldData> {
    // phi e1 = e2, phi e2 = -e1 (and phi e4 = e5, phi e5 = -e4 in dim 5).
    let phi3 = phi(3, &[(1, 2, 1), (2, 1, -1)]);
    let phi5 = phi(5, &[(1, 2, 1), (2, 1, -1), (4, 5, 1), (5, 4, -1)]);
    let (dim, c, p) = match name {
        "heisenberg5" => (5, brackets(5, &[(1, 2, 3, 2), (4, 5, 3, 2)]), phi5),
        "abelian5" => (5, brackets(5, &[]), phi5),
        "sphere3" => (3, brackets(3, &[(1, 2, 3, 2), (2, 3, 1, 2), (3, 1, 2, 2)]), phi3),
        "heisenberg3" => (3, brackets(3, &[(1, 2, 3, 2)]), phi3),
        _ => return None,
    };
    Some(ManifoldData {
        name: name.to_string(),
        dim,
        brackets: c,
        metric: None,
        phi: p,
        xi: unit(dim, 3),
        eta: None,
    })
}

pub fn manifold(name: &str) -> Option<FrameManifold> {
    data(name).map(|d| FrameManifold::new(d).expect("built-in manifolds are valid"))
}

pub fn document(name: &str) -> Option<ManifoldDocument> {
    manifold(name).map(|m| ManifoldDocument::from_manifold(&m))
}

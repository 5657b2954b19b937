//! Homogeneous frame manifolds: a metric Lie algebra carrying an almost
//! contact structure `(phi, xi, eta, g)` with constant frame components.

mod document;
mod structure;

pub use document::{parse_manifold, BracketEntry, ManifoldDocument};
pub use structure::{
    classify_contact, exterior_derivative_eta, nijenhuis, validate_almost_contact, Flag,
    StructureClass, Witness,
};

use num_traits::Zero;
use thiserror::Error;

use crate::kernel::rat::{self, Rat};
use crate::kernel::{linalg, vector, Slot, Tensor, Vector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ManifoldError {
    #[error("malformed document: {0}")]
    Syntax(String),
    #[error("{location}: {message}")]
    MalformedRational { location: String, message: String },
    #[error("dimension must be an odd positive integer, got {0}")]
    EvenDimension(usize),
    #[error("{location}: expected {expected} entries, found {found}")]
    Shape {
        location: String,
        expected: usize,
        found: usize,
    },
    #[error("{location}: index {index} outside 1..={dim}")]
    IndexOutOfRange {
        location: String,
        index: usize,
        dim: usize,
    },
    #[error("{location}: bracket [e{i},e{j}] given twice")]
    DuplicateBracket { location: String, i: usize, j: usize },
    #[error("{location}: antisymmetry violated, [e{i},e{j}] has e{k}-component {forward} but [e{j},e{i}] has {backward}")]
    Antisymmetry {
        location: String,
        i: usize,
        j: usize,
        k: usize,
        forward: String,
        backward: String,
    },
    #[error("Jacobi identity fails for (e{i}, e{j}, e{l}): e{k}-component of the cyclic sum is {value}")]
    Jacobi {
        i: usize,
        j: usize,
        l: usize,
        k: usize,
        value: String,
    },
    #[error("metric[{i}][{j}] = {a} but metric[{j}][{i}] = {b}: metric is not symmetric")]
    NonSymmetricMetric {
        i: usize,
        j: usize,
        a: String,
        b: String,
    },
    #[error("metric is not positive definite: leading minor of order {order} is {value}")]
    NotPositiveDefinite { order: usize, value: String },
    #[error("eta[{index}] = {given} disagrees with g(e{index}, xi) = {expected}")]
    EtaMismatch {
        index: usize,
        given: String,
        expected: String,
    },
}

/// Raw manifold data with 0-based component arrays. `metric` and `eta`
/// default to the identity and `g(., xi)` respectively.
#[derive(Debug, Clone)]
pub struct ManifoldData {
    pub name: String,
    pub dim: usize,
    /// `brackets[k][i][j] = C^k_{ij}`
    pub brackets: Vec<Vec<Vec<Rat>>>,
    pub metric: Option<Vec<Vec<Rat>>>,
    /// `phi[k][j]` is the `e_k` component of `phi(e_j)`.
    pub phi: Vec<Vec<Rat>>,
    pub xi: Vec<Rat>,
    pub eta: Option<Vec<Rat>>,
}

/// A validated frame manifold. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameManifold {
    name: String,
    dim: usize,
    brackets: Tensor,
    metric: Tensor,
    metric_inv: Tensor,
    phi: Tensor,
    xi: Vector,
    eta: Vector,
}

impl FrameManifold {
    pub fn new(data: ManifoldData) -> Result<Self, ManifoldError> {
        let ManifoldData {
            name,
            dim,
            brackets,
            metric,
            phi,
            xi,
            eta,
        } = data;
        if dim % 2 == 0 {
            return Err(ManifoldError::EvenDimension(dim));
        }
        let shape = |location: &str, expected: usize, found: usize| {
            if expected == found {
                Ok(())
            } else {
                Err(ManifoldError::Shape {
                    location: location.to_string(),
                    expected,
                    found,
                })
            }
        };
        shape("brackets", dim, brackets.len())?;
        for (k, plane) in brackets.iter().enumerate() {
            shape(&format!("brackets[{k}]"), dim, plane.len())?;
            for (i, row) in plane.iter().enumerate() {
                shape(&format!("brackets[{k}][{i}]"), dim, row.len())?;
            }
        }
        shape("phi", dim, phi.len())?;
        for (i, row) in phi.iter().enumerate() {
            shape(&format!("phi[{i}]"), dim, row.len())?;
        }
        shape("xi", dim, xi.len())?;

        let brackets = Tensor::from_fn(dim, &[Slot::Upper, Slot::Lower, Slot::Lower], |ix| {
            brackets[ix[0]][ix[1]][ix[2]].clone()
        });
        for k in 0..dim {
            for i in 0..dim {
                for j in i..dim {
                    let f = brackets.get(&[k, i, j]);
                    let b = brackets.get(&[k, j, i]);
                    if *f != -b.clone() {
                        return Err(ManifoldError::Antisymmetry {
                            location: "brackets".into(),
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            forward: rat::render(f),
                            backward: rat::render(b),
                        });
                    }
                }
            }
        }
        check_jacobi(&brackets)?;

        let metric_rows = match metric {
            Some(rows) => {
                shape("metric", dim, rows.len())?;
                for (i, row) in rows.iter().enumerate() {
                    shape(&format!("metric[{i}]"), dim, row.len())?;
                }
                rows
            }
            None => (0..dim)
                .map(|i| (0..dim).map(|j| if i == j { rat::one() } else { rat::zero() }).collect())
                .collect(),
        };
        for i in 0..dim {
            for j in i + 1..dim {
                if metric_rows[i][j] != metric_rows[j][i] {
                    return Err(ManifoldError::NonSymmetricMetric {
                        i: i + 1,
                        j: j + 1,
                        a: rat::render(&metric_rows[i][j]),
                        b: rat::render(&metric_rows[j][i]),
                    });
                }
            }
        }
        for (order, minor) in linalg::leading_minors(&metric_rows).into_iter().enumerate() {
            if minor <= Rat::zero() {
                return Err(ManifoldError::NotPositiveDefinite {
                    order: order + 1,
                    value: rat::render(&minor),
                });
            }
        }
        let inv = linalg::inverse(&metric_rows).expect("positive definite metric is invertible");
        let metric = Tensor::from_matrix([Slot::Lower, Slot::Lower], &metric_rows);
        let metric_inv = Tensor::from_matrix([Slot::Upper, Slot::Upper], &inv);

        let lowered: Vector = (0..dim)
            .map(|i| (0..dim).map(|j| &metric_rows[i][j] * &xi[j]).sum())
            .collect();
        let eta = match eta {
            Some(given) => {
                shape("eta", dim, given.len())?;
                for (i, (g, e)) in given.iter().zip(&lowered).enumerate() {
                    if g != e {
                        return Err(ManifoldError::EtaMismatch {
                            index: i + 1,
                            given: rat::render(g),
                            expected: rat::render(e),
                        });
                    }
                }
                given
            }
            None => lowered,
        };

        Ok(Self {
            name,
            dim,
            brackets,
            metric,
            metric_inv,
            phi: Tensor::from_matrix([Slot::Upper, Slot::Lower], &phi),
            xi,
            eta,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn renamed(&self, name: &str) -> FrameManifold {
        FrameManifold {
            name: name.to_string(),
            ..self.clone()
        }
    }

    /// `n` in `dim = 2n + 1`.
    pub fn half_dim(&self) -> usize {
        (self.dim - 1) / 2
    }

    /// Structure constants, indexed `[k, i, j]`.
    pub fn brackets(&self) -> &Tensor {
        &self.brackets
    }

    pub fn metric(&self) -> &Tensor {
        &self.metric
    }

    pub fn metric_inv(&self) -> &Tensor {
        &self.metric_inv
    }

    /// `phi` as a (1,1)-tensor indexed `[row, column]`.
    pub fn phi(&self) -> &Tensor {
        &self.phi
    }

    pub fn xi(&self) -> &[Rat] {
        &self.xi
    }

    pub fn eta(&self) -> &[Rat] {
        &self.eta
    }

    pub fn basis(&self, i: usize) -> Vector {
        vector::basis(self.dim, i)
    }

    pub fn g(&self, x: &[Rat], y: &[Rat]) -> Rat {
        self.metric.bilinear(x, y)
    }

    pub fn phi_of(&self, x: &[Rat]) -> Vector {
        self.phi.apply(x)
    }

    pub fn eta_of(&self, x: &[Rat]) -> Rat {
        self.eta.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// `[x, y]` for constant-coefficient frame vectors.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vector {
        let mut out = vector::zeros(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let c = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let ck = self.brackets.get(&[k, i, j]);
                    if !ck.is_zero() {
                        *o += &c * ck;
                    }
                }
            }
        }
        out
    }

    /// `eta (x) eta` as a covariant rank-2 tensor.
    pub fn eta_eta(&self) -> Tensor {
        Tensor::from_fn(self.dim, &[Slot::Lower, Slot::Lower], |ix| {
            &self.eta[ix[0]] * &self.eta[ix[1]]
        })
    }

    /// Trace of a bilinear form against `g`, i.e. the sum over an
    /// orthonormal frame: `sum_ij g^{ij} f(e_i, e_j)`.
    pub fn metric_trace(&self, mut f: impl FnMut(&[Rat], &[Rat]) -> Rat) -> Rat {
        let mut acc = Rat::zero();
        for (ix, ginv) in self.metric_inv.nonzero() {
            acc += ginv * f(&self.basis(ix[0]), &self.basis(ix[1]));
        }
        acc
    }

    /// Renames frame vectors: new `e_{perm[i]}` is old `e_i`.
    pub fn relabeled(&self, perm: &[usize]) -> FrameManifold {
        assert_eq!(perm.len(), self.dim);
        let mut inv = vec![0; self.dim];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let d = self.dim;
        let map = |t: &Tensor| {
            Tensor::from_fn(d, t.valence(), |ix| {
                let old: Vec<usize> = ix.iter().map(|&i| inv[i]).collect();
                t.get(&old).clone()
            })
        };
        let vec_map = |v: &[Rat]| (0..d).map(|i| v[inv[i]].clone()).collect::<Vector>();
        FrameManifold {
            name: self.name.clone(),
            dim: d,
            brackets: map(&self.brackets),
            metric: map(&self.metric),
            metric_inv: map(&self.metric_inv),
            phi: map(&self.phi),
            xi: vec_map(&self.xi),
            eta: vec_map(&self.eta),
        }
    }
}

fn check_jacobi(c: &Tensor) -> Result<(), ManifoldError> {
    let d = c.dim();
    for i in 0..d {
        for j in i + 1..d {
            for l in j + 1..d {
                for k in 0..d {
                    let mut sum = Rat::zero();
                    for (a, b, e) in [(i, j, l), (j, l, i), (l, i, j)] {
                        for m in 0..d {
                            let x = c.get(&[m, a, b]);
                            if !x.is_zero() {
                                sum += x * c.get(&[k, m, e]);
                            }
                        }
                    }
                    if !sum.is_zero() {
                        return Err(ManifoldError::Jacobi {
                            i: i + 1,
                            j: j + 1,
                            l: l + 1,
                            k: k + 1,
                            value: rat::render(&sum),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

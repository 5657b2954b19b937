//! Dense tensors over [`Rat`] with explicit slot valence.
//!
//! Components are stored row-major: the first slot is the slowest-varying
//! index. Indices are 0-based internally; anything user-facing converts to
//! 1-based at the rendering boundary.

use num_traits::Zero;
use thiserror::Error;

use super::linalg;
use super::rat::Rat;
use super::vector::{self, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Upper,
    Lower,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("slot {slot} out of range for a rank-{rank} tensor")]
    SlotOutOfRange { slot: usize, rank: usize },
    #[error("cannot contract a slot with itself")]
    SameSlot,
    #[error("contracting two {0:?} slots requires a metric")]
    MetricRequired(Slot),
    #[error("metric must be a rank-2 covariant tensor of matching dimension")]
    MetricShape,
    #[error("metric is not invertible")]
    MetricSingular,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    valence: Vec<Slot>,
    data: Vec<Rat>,
}

impl Tensor {
    pub fn zeros(dim: usize, valence: &[Slot]) -> Self {
        let len = dim.pow(valence.len() as u32);
        Self {
            dim,
            valence: valence.to_vec(),
            data: vec![Rat::zero(); len],
        }
    }

    pub fn from_fn(dim: usize, valence: &[Slot], mut f: impl FnMut(&[usize]) -> Rat) -> Self {
        let mut t = Self::zeros(dim, valence);
        let mut idx = vec![0; valence.len()];
        for flat in 0..t.data.len() {
            t.unflatten(flat, &mut idx);
            t.data[flat] = f(&idx);
        }
        t
    }

    /// The identity endomorphism as a (1,1)-tensor.
    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, &[Slot::Upper, Slot::Lower], |ix| {
            if ix[0] == ix[1] {
                super::rat::one()
            } else {
                Rat::zero()
            }
        })
    }

    /// Rank-0 tensor holding a single value.
    pub fn scalar(dim: usize, value: Rat) -> Self {
        Self {
            dim,
            valence: Vec::new(),
            data: vec![value],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.valence.len()
    }

    pub fn valence(&self) -> &[Slot] {
        &self.valence
    }

    pub fn components(&self) -> &[Rat] {
        &self.data
    }

    fn flatten(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.rank());
        idx.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    fn unflatten(&self, mut flat: usize, idx: &mut [usize]) {
        for slot in idx.iter_mut().rev() {
            *slot = flat % self.dim;
            flat /= self.dim;
        }
    }

    pub fn get(&self, idx: &[usize]) -> &Rat {
        &self.data[self.flatten(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Rat) {
        let flat = self.flatten(idx);
        self.data[flat] = value;
    }

    pub fn get_mut(&mut self, idx: &[usize]) -> &mut Rat {
        let flat = self.flatten(idx);
        &mut self.data[flat]
    }

    /// Value of a rank-0 tensor.
    pub fn value(&self) -> &Rat {
        assert!(self.valence.is_empty(), "value() on a tensor of rank {}", self.rank());
        &self.data[0]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// All nonzero components in storage order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Vec<usize>, &Rat)> + '_ {
        self.data.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(flat, v)| {
            let mut idx = vec![0; self.rank()];
            self.unflatten(flat, &mut idx);
            (idx, v)
        })
    }

    pub fn first_nonzero(&self) -> Option<(Vec<usize>, Rat)> {
        self.nonzero().next().map(|(i, v)| (i, v.clone()))
    }

    pub fn scaled(&self, c: &Rat) -> Self {
        Self {
            dim: self.dim,
            valence: self.valence.clone(),
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    /// `self + c * other`; both must share dimension and valence.
    pub fn plus_scaled(&self, c: &Rat, other: &Tensor) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        assert_eq!(self.valence, other.valence, "valence mismatch");
        Self {
            dim: self.dim,
            valence: self.valence.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + c * b).collect(),
        }
    }

    pub fn add(&self, other: &Tensor) -> Self {
        self.plus_scaled(&super::rat::one(), other)
    }

    pub fn sub(&self, other: &Tensor) -> Self {
        self.plus_scaled(&-super::rat::one(), other)
    }

    /// Tensor product, slots of `self` first.
    pub fn outer(&self, other: &Tensor) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut valence = self.valence.clone();
        valence.extend_from_slice(&other.valence);
        let data = self
            .data
            .iter()
            .flat_map(|a| other.data.iter().map(move |b| a * b))
            .collect();
        Self {
            dim: self.dim,
            valence,
            data,
        }
    }

    /// Contracts `slot_a` with `slot_b`.
    ///
    /// An upper/lower pair is summed directly. Two slots of the same kind are
    /// paired through `metric` (a covariant rank-2 tensor): its inverse for
    /// two lower slots, the metric itself for two upper slots. The remaining
    /// slots keep their relative order.
    pub fn contract(
        &self,
        slot_a: usize,
        slot_b: usize,
        metric: Option<&Tensor>,
    ) -> Result<Tensor, TensorError> {
        let rank = self.rank();
        for slot in [slot_a, slot_b] {
            if slot >= rank {
                return Err(TensorError::SlotOutOfRange { slot, rank });
            }
        }
        if slot_a == slot_b {
            return Err(TensorError::SameSlot);
        }
        let kind_a = self.valence[slot_a];
        let pairing: Option<Vec<Vec<Rat>>> = if kind_a == self.valence[slot_b] {
            let g = metric.ok_or(TensorError::MetricRequired(kind_a))?;
            if g.valence != [Slot::Lower, Slot::Lower] || g.dim != self.dim {
                return Err(TensorError::MetricShape);
            }
            let rows = g.as_matrix();
            Some(match kind_a {
                Slot::Upper => rows,
                Slot::Lower => linalg::inverse(&rows).ok_or(TensorError::MetricSingular)?,
            })
        } else {
            None
        };

        let kept: Vec<usize> = (0..rank).filter(|&s| s != slot_a && s != slot_b).collect();
        let valence: Vec<Slot> = kept.iter().map(|&s| self.valence[s]).collect();
        let dim = self.dim;
        let mut full = vec![0; rank];
        Ok(Tensor::from_fn(dim, &valence, |ix| {
            for (&s, &i) in kept.iter().zip(ix) {
                full[s] = i;
            }
            let mut acc = Rat::zero();
            match &pairing {
                None => {
                    for i in 0..dim {
                        full[slot_a] = i;
                        full[slot_b] = i;
                        acc += self.get(&full);
                    }
                }
                Some(p) => {
                    for i in 0..dim {
                        for j in 0..dim {
                            if p[i][j].is_zero() {
                                continue;
                            }
                            full[slot_a] = i;
                            full[slot_b] = j;
                            acc += &p[i][j] * self.get(&full);
                        }
                    }
                }
            }
            acc
        }))
    }

    /// Copies a rank-2 tensor into nested rows.
    pub fn as_matrix(&self) -> Vec<Vec<Rat>> {
        assert_eq!(self.rank(), 2, "as_matrix on rank {}", self.rank());
        self.data.chunks(self.dim).map(<[Rat]>::to_vec).collect()
    }

    pub fn from_matrix(valence: [Slot; 2], rows: &[Vec<Rat>]) -> Self {
        let dim = rows.len();
        Self::from_fn(dim, &valence, |ix| rows[ix[0]][ix[1]].clone())
    }

    /// `T(x, y)` for a rank-2 covariant tensor.
    pub fn bilinear(&self, x: &[Rat], y: &[Rat]) -> Rat {
        debug_assert_eq!(self.rank(), 2);
        let mut acc = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                acc += xi * yj * self.get(&[i, j]);
            }
        }
        acc
    }

    /// `A x` for a (1,1)-tensor stored as `[row, column]`.
    pub fn apply(&self, x: &[Rat]) -> Vector {
        debug_assert_eq!(self.rank(), 2);
        let mut out = vector::zeros(self.dim);
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(&[i, j]);
                if !a.is_zero() {
                    *o += a * xj;
                }
            }
        }
        out
    }

    /// `T(x, y) z` for a (1,3)-tensor stored as `[l, k, i, j]`, meaning
    /// `T(e_i, e_j) e_k = sum_l T[l, k, i, j] e_l`.
    pub fn curvature_apply(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Vector {
        debug_assert_eq!(self.rank(), 4);
        let n = self.dim;
        let mut out = vector::zeros(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate() {
                    if zk.is_zero() {
                        continue;
                    }
                    let c = &xy * zk;
                    for (l, o) in out.iter_mut().enumerate() {
                        let t = self.get(&[l, k, i, j]);
                        if !t.is_zero() {
                            *o += &c * t;
                        }
                    }
                }
            }
        }
        out
    }

    /// Column `T(e_i, e_j) e_k` of a (1,3)-tensor.
    pub fn curvature_basis(&self, i: usize, j: usize, k: usize) -> Vector {
        (0..self.dim).map(|l| self.get(&[l, k, i, j]).clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn trace_of_identity() {
        let t = Tensor::identity(5).contract(0, 1, None).unwrap();
        assert_eq!(t.rank(), 0);
        assert_eq!(*t.value(), int(5));
    }

    #[test]
    fn contraction_errors() {
        let id = Tensor::identity(3);
        assert_eq!(id.contract(0, 2, None), Err(TensorError::SlotOutOfRange { slot: 2, rank: 2 }));
        assert_eq!(id.contract(1, 1, None), Err(TensorError::SameSlot));
        let cov = Tensor::zeros(3, &[Slot::Lower, Slot::Lower]);
        assert_eq!(cov.contract(0, 1, None), Err(TensorError::MetricRequired(Slot::Lower)));
        assert_eq!(cov.contract(0, 1, Some(&cov)), Err(TensorError::MetricSingular));
        assert_eq!(cov.contract(0, 1, Some(&id)), Err(TensorError::MetricShape));
    }

    #[test]
    fn metric_trace_uses_inverse() {
        // g = diag(2, 4): tr_g(g) = dim regardless of g.
        let g = Tensor::from_fn(2, &[Slot::Lower, Slot::Lower], |ix| {
            if ix[0] == ix[1] {
                int(2 * (ix[0] as i64 + 1))
            } else {
                int(0)
            }
        });
        assert_eq!(*g.contract(0, 1, Some(&g)).unwrap().value(), int(2));
        let h = Tensor::from_fn(2, &[Slot::Upper, Slot::Upper], |ix| int((ix[0] * 2 + ix[1]) as i64));
        // g_00 h^00 + g_11 h^11 = 2*0 + 4*3
        assert_eq!(*h.contract(1, 0, Some(&g)).unwrap().value(), int(12));
    }

    #[test]
    fn partial_contraction_keeps_order() {
        let t = Tensor::from_fn(2, &[Slot::Lower, Slot::Upper, Slot::Lower], |ix| {
            int((ix[0] * 4 + ix[1] * 2 + ix[2]) as i64)
        });
        let c = t.contract(1, 2, None).unwrap();
        assert_eq!(c.valence(), &[Slot::Lower]);
        assert_eq!(*c.get(&[0]), int(3));
        assert_eq!(*c.get(&[1]), int(4 + 7));
    }

    #[test]
    fn outer_and_apply() {
        let v = Tensor::from_fn(2, &[Slot::Upper], |ix| int(ix[0] as i64 + 1));
        let w = Tensor::from_fn(2, &[Slot::Lower], |ix| frac(1, ix[0] as i64 + 1));
        let vw = v.outer(&w);
        assert_eq!(*vw.get(&[1, 1]), int(1));
        assert_eq!(vw.apply(&[int(2), int(2)]), vec![int(3), int(6)]);
    }

    fn arb_tensor() -> impl Strategy<Value = Tensor> {
        proptest::collection::vec(-9i64..9, 27).prop_map(|vals| {
            let mut it = vals.into_iter();
            Tensor::from_fn(3, &[Slot::Upper, Slot::Lower, Slot::Lower], |_| int(it.next().unwrap()))
        })
    }

    proptest! {
        #[test]
        fn contraction_is_linear(t1 in arb_tensor(), t2 in arb_tensor(), a in -5i64..5, b in 1i64..5) {
            let (a, b) = (int(a), frac(1, b));
            let combo = t1.scaled(&a).plus_scaled(&b, &t2);
            for (s1, s2) in [(0, 1), (0, 2)] {
                let lhs = combo.contract(s1, s2, None).unwrap();
                let rhs = t1.contract(s1, s2, None).unwrap().scaled(&a)
                    .plus_scaled(&b, &t2.contract(s1, s2, None).unwrap());
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}

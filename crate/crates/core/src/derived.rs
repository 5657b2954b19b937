//! Conharmonic, projective and pseudo-projective curvature tensors, the
//! derivation conditions `R(xi,X).S`, `S(xi,X).R`, `P̄(xi,X).S`, and
//! phi-flatness.
//!
//! Throughout, `n` in the divisors is the manifold dimension (not the `n`
//! of `dim = 2n + 1`).

use num_traits::Zero;
use thiserror::Error;

use crate::curvature::{check_vectors, CurvaturePack, IdentityCheck};
use crate::kernel::rat::{self, Rat};
use crate::kernel::{vector, Slot, Tensor, Vector};
use crate::manifold::FrameManifold;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DerivedError {
    #[error("the {tensor} tensor needs dimension at least {min}, got {dim}")]
    DimensionTooSmall {
        tensor: &'static str,
        dim: usize,
        min: usize,
    },
    #[error("pseudo-projective coefficient {0} must be nonzero")]
    ZeroCoefficient(&'static str),
    #[error("the pseudo-projective condition needs (a, b) parameters")]
    MissingParams,
}

/// Coefficients of the pseudo-projective tensor. `r_override` replaces the
/// computed scalar curvature (e.g. `-1` for the conformal-flow normalisation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoProjectiveParams {
    a: Rat,
    b: Rat,
    r_override: Option<Rat>,
}

impl PseudoProjectiveParams {
    pub fn new(a: Rat, b: Rat, r_override: Option<Rat>) -> Result<Self, DerivedError> {
        if a.is_zero() {
            return Err(DerivedError::ZeroCoefficient("a"));
        }
        if b.is_zero() {
            return Err(DerivedError::ZeroCoefficient("b"));
        }
        Ok(Self { a, b, r_override })
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn r_override(&self) -> Option<&Rat> {
        self.r_override.as_ref()
    }

    /// The scalar curvature the tensor is built with.
    pub fn effective_r(&self, pack: &CurvaturePack) -> Rat {
        self.r_override.clone().unwrap_or_else(|| pack.scalar.clone())
    }
}

fn assemble(m: &FrameManifold, mut f: impl FnMut(&[Rat], &[Rat], &[Rat]) -> Vector) -> Tensor {
    let d = m.dim();
    let mut t = Tensor::zeros(d, &[Slot::Upper, Slot::Lower, Slot::Lower, Slot::Lower]);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let v = f(&m.basis(i), &m.basis(j), &m.basis(k));
                for (l, c) in v.into_iter().enumerate() {
                    t.set(&[l, k, i, j], c);
                }
            }
        }
    }
    t
}

fn min_dim(tensor: &'static str, m: &FrameManifold, min: usize) -> Result<(), DerivedError> {
    if m.dim() < min {
        Err(DerivedError::DimensionTooSmall {
            tensor,
            dim: m.dim(),
            min,
        })
    } else {
        Ok(())
    }
}

/// `H(X,Y)Z = R(X,Y)Z - 1/(n-2) [g(Y,Z)QX - g(X,Z)QY + S(Y,Z)X - S(X,Z)Y]`
pub fn conharmonic(m: &FrameManifold, pack: &CurvaturePack) -> Result<Tensor, DerivedError> {
    min_dim("conharmonic", m, 3)?;
    let c = rat::frac(1, m.dim() as i64 - 2);
    Ok(assemble(m, |x, y, z| {
        let mut bracket = vector::scale(&m.g(y, z), &pack.q(x));
        vector::axpy(&mut bracket, &-m.g(x, z), &pack.q(y));
        vector::axpy(&mut bracket, &pack.s(y, z), x);
        vector::axpy(&mut bracket, &-pack.s(x, z), y);
        let mut out = pack.r(x, y, z);
        vector::axpy(&mut out, &-c.clone(), &bracket);
        out
    }))
}

/// `P(X,Y)Z = R(X,Y)Z - 1/(n-1) [g(Y,Z)QX - g(X,Z)QY]`
pub fn projective(m: &FrameManifold, pack: &CurvaturePack) -> Result<Tensor, DerivedError> {
    min_dim("projective", m, 2)?;
    let c = rat::frac(1, m.dim() as i64 - 1);
    Ok(assemble(m, |x, y, z| {
        let mut bracket = vector::scale(&m.g(y, z), &pack.q(x));
        vector::axpy(&mut bracket, &-m.g(x, z), &pack.q(y));
        let mut out = pack.r(x, y, z);
        vector::axpy(&mut out, &-c.clone(), &bracket);
        out
    }))
}

/// `P̄(X,Y)Z = aR(X,Y)Z + b[S(Y,Z)X - S(X,Z)Y] - (r/n)(a/(n-1) + b)[g(Y,Z)X - g(X,Z)Y]`
pub fn pseudo_projective(
    m: &FrameManifold,
    pack: &CurvaturePack,
    params: &PseudoProjectiveParams,
) -> Result<Tensor, DerivedError> {
    min_dim("pseudo-projective", m, 2)?;
    let n = m.dim() as i64;
    let r = params.effective_r(pack);
    let c = &r / rat::int(n) * (&params.a / rat::int(n - 1) + &params.b);
    Ok(assemble(m, |x, y, z| {
        let mut out = vector::scale(&params.a, &pack.r(x, y, z));
        let mut ricci_part = vector::scale(&pack.s(y, z), x);
        vector::axpy(&mut ricci_part, &-pack.s(x, z), y);
        vector::axpy(&mut out, &params.b, &ricci_part);
        let mut metric_part = vector::scale(&m.g(y, z), x);
        vector::axpy(&mut metric_part, &-m.g(x, z), y);
        vector::axpy(&mut out, &-c.clone(), &metric_part);
        out
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConditionKind {
    /// `R(xi, X) . S = 0`
    RXiDotS,
    /// `S(xi, X) . R = 0`
    SXiDotR,
    /// `P̄(xi, X) . S = 0`
    PbarXiDotS,
}

impl ConditionKind {
    pub const ALL: [ConditionKind; 3] = [Self::RXiDotS, Self::SXiDotR, Self::PbarXiDotS];

    pub fn label(self) -> &'static str {
        match self {
            Self::RXiDotS => "R(xi,X).S = 0",
            Self::SXiDotR => "S(xi,X).R = 0",
            Self::PbarXiDotS => "Pbar(xi,X).S = 0",
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            Self::RXiDotS => "R_xi_dot_S",
            Self::SXiDotR => "S_xi_dot_R",
            Self::PbarXiDotS => "Pbar_xi_dot_S",
        }
    }
}

/// First nonzero entry of a condition tensor. `indices` are 1-based frame
/// indices of the arguments; `value` is a vector for vector-valued
/// conditions and a single entry otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionWitness {
    pub indices: Vec<usize>,
    pub value: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub kind: ConditionKind,
    pub holds: bool,
    pub witness: Option<ConditionWitness>,
    /// Side quantities, e.g. the pseudo-projective branch factor.
    pub notes: Vec<String>,
}

/// Runs `f` over every index tuple of the given arity and keeps the first
/// nonzero value.
fn first_nonzero(d: usize, arity: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Option<ConditionWitness> {
    let mut idx = vec![0; arity];
    for flat in 0..d.pow(arity as u32) {
        let mut rest = flat;
        for slot in idx.iter_mut().rev() {
            *slot = rest % d;
            rest /= d;
        }
        let v = f(&idx);
        if !vector::is_zero(&v) {
            return Some(ConditionWitness {
                indices: idx.iter().map(|i| i + 1).collect(),
                value: v,
            });
        }
    }
    None
}

/// `S(T(xi,X)Y, Z) + S(Y, T(xi,X)Z)` for a (1,3)-tensor `T`.
fn derivation_on_ricci(m: &FrameManifold, pack: &CurvaturePack, t: &Tensor) -> Option<ConditionWitness> {
    let xi = m.xi();
    first_nonzero(m.dim(), 3, |ix| {
        let (x, y, z) = (m.basis(ix[0]), m.basis(ix[1]), m.basis(ix[2]));
        vec![pack.s(&t.curvature_apply(xi, &x, &y), &z) + pack.s(&y, &t.curvature_apply(xi, &x, &z))]
    })
}

/// The eight-term expression for `S(xi,X).R`, taken verbatim in the printed
/// sign pattern.
fn ricci_wedge_on_riemann(m: &FrameManifold, pack: &CurvaturePack) -> Option<ConditionWitness> {
    let xi = m.xi();
    first_nonzero(m.dim(), 4, |ix| {
        let (x, y, z, w) = (m.basis(ix[0]), m.basis(ix[1]), m.basis(ix[2]), m.basis(ix[3]));
        let ryzw = pack.r(&y, &z, &w);
        let mut v = vector::scale(&pack.s(&x, &ryzw), xi);
        vector::axpy(&mut v, &-pack.s(xi, &ryzw), &x);
        vector::axpy(&mut v, &pack.s(&x, &y), &pack.r(xi, &z, &w));
        vector::axpy(&mut v, &-pack.s(xi, &y), &pack.r(&x, &z, &w));
        vector::axpy(&mut v, &pack.s(&x, &z), &pack.r(&y, xi, &w));
        vector::axpy(&mut v, &-pack.s(xi, &z), &pack.r(&y, &x, &w));
        vector::axpy(&mut v, &pack.s(&x, &w), &pack.r(&y, &z, xi));
        vector::axpy(&mut v, &-pack.s(xi, &w), &pack.r(&y, &z, &x));
        v
    })
}

/// `a - r/(2n+1) (a/(2n) + b)`, written with the manifold dimension `d`:
/// `a - (r/d)(a/(d-1) + b)`.
pub fn pseudo_projective_branch_factor(m: &FrameManifold, params: &PseudoProjectiveParams, r: &Rat) -> Rat {
    let d = m.dim() as i64;
    params.a() - r / rat::int(d) * (params.a() / rat::int(d - 1) + params.b())
}

pub fn derivation_condition(
    m: &FrameManifold,
    pack: &CurvaturePack,
    kind: ConditionKind,
    params: Option<&PseudoProjectiveParams>,
) -> Result<ConditionReport, DerivedError> {
    let mut notes = Vec::new();
    let witness = match kind {
        ConditionKind::RXiDotS => derivation_on_ricci(m, pack, &pack.riemann),
        ConditionKind::SXiDotR => ricci_wedge_on_riemann(m, pack),
        ConditionKind::PbarXiDotS => {
            let params = params.ok_or(DerivedError::MissingParams)?;
            let pbar = pseudo_projective(m, pack, params)?;
            let r = params.effective_r(pack);
            notes.push(format!(
                "a = {}, b = {}, r = {}{}; a - (r/{})(a/{} + b) = {}",
                rat::render(params.a()),
                rat::render(params.b()),
                rat::render(&r),
                if params.r_override().is_some() { " (override)" } else { "" },
                m.dim(),
                m.dim() - 1,
                rat::render(&pseudo_projective_branch_factor(m, params, &r)),
            ));
            derivation_on_ricci(m, pack, &pbar)
        }
    };
    Ok(ConditionReport {
        kind,
        holds: witness.is_none(),
        witness,
        notes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlatnessKind {
    Conharmonic,
    Projective,
}

impl FlatnessKind {
    pub fn label(self) -> &'static str {
        match self {
            Self::Conharmonic => "phi-conharmonically flat",
            Self::Projective => "phi-projectively flat",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatnessReport {
    pub kind: FlatnessKind,
    pub holds: bool,
    pub witness: Option<ConditionWitness>,
    /// Frame-sum identities used when reducing phi-flatness on a Sasakian
    /// manifold. Only expected to hold on Sasakian inputs.
    pub contraction_identities: Vec<IdentityCheck>,
}

/// Evaluates `g(T(phi e_i, phi e_j) phi e_k, phi e_l)` over all quadruples.
pub fn phi_flatness(m: &FrameManifold, pack: &CurvaturePack, kind: FlatnessKind) -> Result<FlatnessReport, DerivedError> {
    let t = match kind {
        FlatnessKind::Conharmonic => conharmonic(m, pack)?,
        FlatnessKind::Projective => projective(m, pack)?,
    };
    let phis: Vec<Vector> = (0..m.dim()).map(|i| m.phi_of(&m.basis(i))).collect();
    let witness = first_nonzero(m.dim(), 4, |ix| {
        let v = t.curvature_apply(&phis[ix[0]], &phis[ix[1]], &phis[ix[2]]);
        vec![m.g(&v, &phis[ix[3]])]
    });
    Ok(FlatnessReport {
        kind,
        holds: witness.is_none(),
        witness,
        contraction_identities: contraction_identities(m, pack),
    })
}

/// Sums over an orthonormal frame (realised as `g`-traces) that hold on any
/// Sasakian manifold.
pub fn contraction_identities(m: &FrameManifold, pack: &CurvaturePack) -> Vec<IdentityCheck> {
    let d = m.dim();
    let two_n = rat::int(2 * m.half_dim() as i64);
    let phi = |v: &[Rat]| m.phi_of(v);
    let pe = |i: usize| m.phi_of(&m.basis(i));
    vec![
        check_vectors("sum_i g(phi e_i, phi e_i) = 2n", 0, d, |_| {
            (vec![m.metric_trace(|u, v| m.g(&phi(u), &phi(v)))], vec![two_n.clone()])
        }),
        check_vectors("sum_i S(phi e_i, phi e_i) = r - 2n", 0, d, |_| {
            (vec![m.metric_trace(|u, v| pack.s(&phi(u), &phi(v)))], vec![&pack.scalar - &two_n])
        }),
        check_vectors("sum_i g(phi e_i, phi Z) g(phi Y, phi e_i) = g(phi Y, phi Z)", 2, d, |ix| {
            let (py, pz) = (pe(ix[0]), pe(ix[1]));
            (
                vec![m.metric_trace(|u, v| m.g(&phi(u), &pz) * m.g(&py, &phi(v)))],
                vec![m.g(&py, &pz)],
            )
        }),
        check_vectors("sum_i g(phi e_i, phi Z) S(phi Y, phi e_i) = S(phi Y, phi Z)", 2, d, |ix| {
            let (py, pz) = (pe(ix[0]), pe(ix[1]));
            (
                vec![m.metric_trace(|u, v| m.g(&phi(u), &pz) * pack.s(&py, &phi(v)))],
                vec![pack.s(&py, &pz)],
            )
        }),
        check_vectors(
            "sum_i g(R(phi e_i, phi Y) phi Z, phi e_i) = S(phi Y, phi Z) - g(phi Y, phi Z)",
            2,
            d,
            |ix| {
                let (py, pz) = (pe(ix[0]), pe(ix[1]));
                (
                    vec![m.metric_trace(|u, v| m.g(&pack.r(&phi(u), &py, &pz), &phi(v)))],
                    vec![pack.s(&py, &pz) - m.g(&py, &pz)],
                )
            },
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::curvature::levi_civita;
    use crate::kernel::rat::{frac, int};

    fn pack(name: &str) -> (FrameManifold, CurvaturePack) {
        let m = builtins::manifold(name).unwrap();
        let p = CurvaturePack::new(&m, &levi_civita(&m));
        (m, p)
    }

    fn params(a: Rat, b: Rat) -> PseudoProjectiveParams {
        PseudoProjectiveParams::new(a, b, None).unwrap()
    }

    #[test]
    fn params_reject_zero() {
        assert_eq!(
            PseudoProjectiveParams::new(int(0), int(1), None),
            Err(DerivedError::ZeroCoefficient("a"))
        );
        assert_eq!(
            PseudoProjectiveParams::new(int(1), int(0), None),
            Err(DerivedError::ZeroCoefficient("b"))
        );
    }

    #[test]
    fn flat_tensors_vanish() {
        let (m, p) = pack("abelian5");
        assert!(conharmonic(&m, &p).unwrap().is_zero());
        assert!(projective(&m, &p).unwrap().is_zero());
        for (a, b) in [(1, 1), (-3, 7)] {
            assert!(pseudo_projective(&m, &p, &params(int(a), int(b))).unwrap().is_zero());
        }
    }

    #[test]
    fn conharmonic_components() {
        let (m, p) = pack("heisenberg5");
        let h = conharmonic(&m, &p).unwrap();
        assert_eq!(h.curvature_basis(0, 2, 2), vector::scale(&frac(1, 3), &m.basis(0)));
        let (m, p) = pack("sphere3");
        let h = conharmonic(&m, &p).unwrap();
        assert_eq!(h.curvature_basis(0, 1, 1), vector::scale(&int(-3), &m.basis(0)));
    }

    #[test]
    fn projective_components() {
        let (m, p) = pack("sphere3");
        assert!(projective(&m, &p).unwrap().is_zero());
        let (m, p) = pack("heisenberg5");
        // e1 - 1/4 [g(e3,e3) Q e1 - g(e1,e3) Q e3] = e1 + (1/2) e1
        let t = projective(&m, &p).unwrap();
        assert_eq!(t.curvature_basis(0, 2, 2), vector::scale(&frac(3, 2), &m.basis(0)));
    }

    #[test]
    fn pseudo_projective_components() {
        let (m, p) = pack("heisenberg5");
        let t = pseudo_projective(&m, &p, &params(int(1), int(1))).unwrap();
        assert!(vector::is_zero(&t.curvature_apply(m.xi(), &m.basis(0), &m.basis(0))));
        // a = 1, b = -1/2 makes aR + b[S(Y,Z)X - S(X,Z)Y] cancel on S = 2g,
        // and a/(n-1) + b = 0 kills the scalar term.
        let (m, p) = pack("sphere3");
        assert!(pseudo_projective(&m, &p, &params(int(1), frac(-1, 2))).unwrap().is_zero());
    }

    #[test]
    fn pseudo_projective_is_antisymmetric_in_first_pair() {
        let (m, p) = pack("heisenberg5");
        let t = pseudo_projective(&m, &p, &params(int(2), frac(-1, 3))).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                for k in 0..5 {
                    assert_eq!(
                        t.curvature_basis(i, j, k),
                        vector::scale(&int(-1), &t.curvature_basis(j, i, k))
                    );
                }
            }
        }
    }

    #[test]
    fn dimension_guard() {
        let mut data = builtins::data("heisenberg3").unwrap();
        data.dim = 1;
        data.brackets = vec![vec![vec![int(0)]]];
        data.phi = vec![vec![int(0)]];
        data.xi = vec![int(1)];
        let m = FrameManifold::new(data).unwrap();
        let p = CurvaturePack::new(&m, &levi_civita(&m));
        assert!(matches!(conharmonic(&m, &p), Err(DerivedError::DimensionTooSmall { .. })));
        assert!(matches!(projective(&m, &p), Err(DerivedError::DimensionTooSmall { .. })));
    }

    #[test]
    fn derivation_conditions() {
        let (m, p) = pack("sphere3");
        assert!(derivation_condition(&m, &p, ConditionKind::RXiDotS, None).unwrap().holds);

        let (m, p) = pack("heisenberg5");
        let rep = derivation_condition(&m, &p, ConditionKind::RXiDotS, None).unwrap();
        assert!(!rep.holds);
        let w = rep.witness.unwrap();
        assert_eq!(w.indices, vec![1, 1, 3]);
        assert_eq!(w.value, vec![int(6)]);

        let (m, p) = pack("abelian5");
        let pp = params(int(1), int(1));
        for kind in ConditionKind::ALL {
            assert!(derivation_condition(&m, &p, kind, Some(&pp)).unwrap().holds, "{kind:?}");
        }
        assert_eq!(
            derivation_condition(&m, &p, ConditionKind::PbarXiDotS, None),
            Err(DerivedError::MissingParams)
        );
    }

    #[test]
    fn flatness() {
        let (m, p) = pack("sphere3");
        assert!(phi_flatness(&m, &p, FlatnessKind::Projective).unwrap().holds);
        let (m, p) = pack("heisenberg5");
        let rep = phi_flatness(&m, &p, FlatnessKind::Conharmonic).unwrap();
        assert!(!rep.holds);
        assert!(rep.witness.is_some());
        for check in &rep.contraction_identities {
            assert!(check.flag.holds, "{check:?}");
        }
        let trace = m.metric_trace(|u, v| m.g(&m.phi_of(u), &m.phi_of(v)));
        assert_eq!(trace, int(4));
    }
}

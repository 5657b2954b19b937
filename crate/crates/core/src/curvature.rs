//! Levi-Civita connection and curvature of a frame manifold.
//!
//! Everything is evaluated on constant-coefficient frame fields, so all
//! frame-derivative terms vanish and the formulas reduce to finite sums over
//! structure constants.

use num_traits::Zero;

use crate::kernel::rat::{self, Rat};
use crate::kernel::{vector, Slot, Tensor, Vector};
use crate::manifold::{Flag, FrameManifold};

/// Christoffel symbols: `nabla_{e_i} e_j = sum_k gamma[k, i, j] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    gamma: Tensor,
}

impl Connection {
    pub fn gamma(&self) -> &Tensor {
        &self.gamma
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    /// `nabla_{e_i} e_j`
    pub fn basis(&self, i: usize, j: usize) -> Vector {
        (0..self.dim()).map(|k| self.gamma.get(&[k, i, j]).clone()).collect()
    }

    /// `nabla_x y` for constant-coefficient `x`, `y`.
    pub fn covariant(&self, x: &[Rat], y: &[Rat]) -> Vector {
        let d = self.dim();
        let mut out = vector::zeros(d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let gk = self.gamma.get(&[k, i, j]);
                    if !gk.is_zero() {
                        *o += &c * gk;
                    }
                }
            }
        }
        out
    }

    /// First `(i, j, k)` with `gamma^k_ij - gamma^k_ji != C^k_ij`.
    pub fn torsion_defect(&self, m: &FrameManifold) -> Option<[usize; 3]> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let t = self.gamma.get(&[k, i, j]) - self.gamma.get(&[k, j, i]);
                    if t != *m.brackets().get(&[k, i, j]) {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    /// First `(k, i, j)` with `g(nabla_k e_i, e_j) + g(e_i, nabla_k e_j) != 0`.
    pub fn compatibility_defect(&self, m: &FrameManifold) -> Option<[usize; 3]> {
        let d = self.dim();
        for k in 0..d {
            for i in 0..d {
                for j in 0..d {
                    let s = m.g(&self.basis(k, i), &m.basis(j)) + m.g(&m.basis(i), &self.basis(k, j));
                    if !s.is_zero() {
                        return Some([k, i, j]);
                    }
                }
            }
        }
        None
    }
}

/// Koszul formula on the frame:
/// `2 g(nabla_i e_j, e_k) = -g(e_i, [e_j,e_k]) - g(e_j, [e_i,e_k]) + g(e_k, [e_i,e_j])`.
pub fn levi_civita(m: &FrameManifold) -> Connection {
    let d = m.dim();
    let half = rat::frac(1, 2);
    let lowered = Tensor::from_fn(d, &[Slot::Lower, Slot::Lower, Slot::Lower], |ix| {
        let (ei, ej, ek) = (m.basis(ix[0]), m.basis(ix[1]), m.basis(ix[2]));
        let s = -m.g(&ei, &m.bracket(&ej, &ek)) - m.g(&ej, &m.bracket(&ei, &ek))
            + m.g(&ek, &m.bracket(&ei, &ej));
        &half * s
    });
    let ginv = m.metric_inv();
    let gamma = Tensor::from_fn(d, &[Slot::Upper, Slot::Lower, Slot::Lower], |ix| {
        let (l, i, j) = (ix[0], ix[1], ix[2]);
        (0..d)
            .filter(|&k| !ginv.get(&[l, k]).is_zero())
            .map(|k| ginv.get(&[l, k]) * lowered.get(&[i, j, k]))
            .sum()
    });
    Connection { gamma }
}

/// `R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z`, stored
/// as `[l, k, i, j]` with `R(e_i, e_j) e_k = sum_l R[l, k, i, j] e_l`.
pub fn riemann(m: &FrameManifold, conn: &Connection) -> Tensor {
    let d = m.dim();
    let mut r = Tensor::zeros(d, &[Slot::Upper, Slot::Lower, Slot::Lower, Slot::Lower]);
    for i in 0..d {
        for j in 0..d {
            let (ei, ej) = (m.basis(i), m.basis(j));
            let bracket = m.bracket(&ei, &ej);
            for k in 0..d {
                let ek = m.basis(k);
                let a = conn.covariant(&ei, &conn.basis(j, k));
                let b = conn.covariant(&ej, &conn.basis(i, k));
                let c = conn.covariant(&bracket, &ek);
                let v = vector::sub(&vector::sub(&a, &b), &c);
                for (l, x) in v.into_iter().enumerate() {
                    r.set(&[l, k, i, j], x);
                }
            }
        }
    }
    r
}

/// Ricci data derived from the Riemann tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvaturePack {
    pub riemann: Tensor,
    /// `S(e_i, e_j)`, indexed `[i, j]`.
    pub ricci: Tensor,
    pub scalar: Rat,
    /// Ricci operator `Q` with `S(X, Y) = g(QX, Y)`, indexed `[row, column]`.
    pub ricci_operator: Tensor,
    /// `S*(e_i, e_j)`, indexed `[i, j]`.
    pub star_ricci: Tensor,
}

impl CurvaturePack {
    pub fn new(m: &FrameManifold, conn: &Connection) -> Self {
        let riemann = riemann(m, conn);
        let (ricci, scalar, ricci_operator) = ricci(m, &riemann);
        let star_ricci = star_ricci(m, &riemann);
        Self {
            riemann,
            ricci,
            scalar,
            ricci_operator,
            star_ricci,
        }
    }

    /// `R(x, y) z`
    pub fn r(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Vector {
        self.riemann.curvature_apply(x, y, z)
    }

    /// `S(x, y)`
    pub fn s(&self, x: &[Rat], y: &[Rat]) -> Rat {
        self.ricci.bilinear(x, y)
    }

    /// `Q x`
    pub fn q(&self, x: &[Rat]) -> Vector {
        self.ricci_operator.apply(x)
    }
}

/// `S(Y, Z) = trace(X -> R(X, Y) Z)`, the Ricci operator, and `r = tr Q`.
pub fn ricci(m: &FrameManifold, r: &Tensor) -> (Tensor, Rat, Tensor) {
    let d = m.dim();
    // Contracting the output slot with the first argument slot leaves [k, j].
    let traced = r.contract(0, 2, None).expect("rank-4 tensor");
    let s = Tensor::from_fn(d, &[Slot::Lower, Slot::Lower], |ix| traced.get(&[ix[1], ix[0]]).clone());
    let ginv = m.metric_inv();
    let q = Tensor::from_fn(d, &[Slot::Upper, Slot::Lower], |ix| {
        let (l, x) = (ix[0], ix[1]);
        (0..d).map(|y| ginv.get(&[l, y]) * s.get(&[x, y])).sum()
    });
    let scalar = q.contract(0, 1, None).expect("rank-2 tensor").value().clone();
    (s, scalar, q)
}

/// `S*(X, Y) = 1/2 trace(Z -> phi R(X, phi Y) Z)`.
pub fn star_ricci(m: &FrameManifold, r: &Tensor) -> Tensor {
    let d = m.dim();
    let half = rat::frac(1, 2);
    Tensor::from_fn(d, &[Slot::Lower, Slot::Lower], |ix| {
        let x = m.basis(ix[0]);
        let phi_y = m.phi_of(&m.basis(ix[1]));
        let mut map = Tensor::zeros(d, &[Slot::Upper, Slot::Lower]);
        for k in 0..d {
            let col = m.phi_of(&r.curvature_apply(&x, &phi_y, &m.basis(k)));
            for (l, v) in col.into_iter().enumerate() {
                map.set(&[l, k], v);
            }
        }
        &half * map.contract(0, 1, None).expect("rank-2 tensor").value()
    })
}

/// Covariant derivative of the Ricci tensor and its cyclic sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RicciDerivative {
    /// `(nabla_{e_i} S)(e_j, e_k)`, indexed `[i, j, k]`.
    pub nabla: Tensor,
    /// `(nabla_X S)(Y,Z) + (nabla_Y S)(Z,X) + (nabla_Z S)(X,Y)`.
    pub cyclic: Tensor,
}

pub fn nabla_ricci(m: &FrameManifold, conn: &Connection, s: &Tensor) -> RicciDerivative {
    let d = m.dim();
    let three = [Slot::Lower, Slot::Lower, Slot::Lower];
    let nabla = Tensor::from_fn(d, &three, |ix| {
        let (i, j, k) = (ix[0], ix[1], ix[2]);
        -s.bilinear(&conn.basis(i, j), &m.basis(k)) - s.bilinear(&m.basis(j), &conn.basis(i, k))
    });
    let cyclic = Tensor::from_fn(d, &three, |ix| {
        let (x, y, z) = (ix[0], ix[1], ix[2]);
        nabla.get(&[x, y, z]) + nabla.get(&[y, z, x]) + nabla.get(&[z, x, y])
    });
    RicciDerivative { nabla, cyclic }
}

/// `(L_V g)(e_i, e_j) = g(nabla_{e_i} V, e_j) + g(e_i, nabla_{e_j} V)`.
pub fn lie_derivative_metric(m: &FrameManifold, conn: &Connection, v: &[Rat]) -> Tensor {
    let d = m.dim();
    let grads: Vec<Vector> = (0..d).map(|i| conn.covariant(&m.basis(i), v)).collect();
    Tensor::from_fn(d, &[Slot::Lower, Slot::Lower], |ix| {
        m.g(&grads[ix[0]], &m.basis(ix[1])) + m.g(&m.basis(ix[0]), &grads[ix[1]])
    })
}

/// One identity evaluated over all frame tuples. Identities marked
/// `required = false` are reported but not expected on every Sasakian input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub required: bool,
    pub flag: Flag,
}

pub(crate) fn check_vectors(
    name: &'static str,
    arity: usize,
    d: usize,
    mut f: impl FnMut(&[usize]) -> (Vector, Vector),
) -> IdentityCheck {
    let total = d.pow(arity as u32);
    let mut idx = vec![0; arity];
    for flat in 0..total {
        let mut rest = flat;
        for slot in idx.iter_mut().rev() {
            *slot = rest % d;
            rest /= d;
        }
        let (lhs, rhs) = f(&idx);
        if lhs != rhs {
            return IdentityCheck {
                name,
                required: true,
                flag: Flag::fail(
                    name,
                    &idx,
                    format!("{} != {}", vector::render(&lhs), vector::render(&rhs)),
                ),
            };
        }
    }
    IdentityCheck {
        name,
        required: true,
        flag: Flag::pass(),
    }
}

fn scalar_pair(a: Rat, b: Rat) -> (Vector, Vector) {
    (vec![a], vec![b])
}

/// Identities every Sasakian manifold satisfies, plus the constant
/// curvature form `R(X,Y)Z = g(Y,Z)X - g(X,Z)Y` reported separately.
pub fn sasakian_identity_suite(m: &FrameManifold, conn: &Connection, pack: &CurvaturePack) -> Vec<IdentityCheck> {
    let d = m.dim();
    let e = |i: usize| m.basis(i);
    let xi = m.xi().to_vec();
    let two_n = rat::int(2 * m.half_dim() as i64);
    let mut out = Vec::new();

    out.push(check_vectors("nabla_X xi = -phi X", 1, d, |ix| {
        (conn.covariant(&e(ix[0]), &xi), vector::scale(&-rat::one(), &m.phi_of(&e(ix[0]))))
    }));
    out.push(check_vectors("R(X,Y)xi = eta(Y)X - eta(X)Y", 2, d, |ix| {
        let (x, y) = (e(ix[0]), e(ix[1]));
        let rhs = vector::sub(&vector::scale(&m.eta_of(&y), &x), &vector::scale(&m.eta_of(&x), &y));
        (pack.r(&x, &y, &xi), rhs)
    }));
    out.push(check_vectors("R(xi,X)Y = g(X,Y)xi - eta(Y)X", 2, d, |ix| {
        let (x, y) = (e(ix[0]), e(ix[1]));
        let rhs = vector::sub(&vector::scale(&m.g(&x, &y), &xi), &vector::scale(&m.eta_of(&y), &x));
        (pack.r(&xi, &x, &y), rhs)
    }));
    out.push(check_vectors("eta(R(X,Y)Z) = g(Y,Z)eta(X) - g(X,Z)eta(Y)", 3, d, |ix| {
        let (x, y, z) = (e(ix[0]), e(ix[1]), e(ix[2]));
        scalar_pair(
            m.eta_of(&pack.r(&x, &y, &z)),
            m.g(&y, &z) * m.eta_of(&x) - m.g(&x, &z) * m.eta_of(&y),
        )
    }));
    out.push(check_vectors("(nabla_X eta)Y = -g(phi X, Y)", 2, d, |ix| {
        let (x, y) = (e(ix[0]), e(ix[1]));
        scalar_pair(-m.eta_of(&conn.covariant(&x, &y)), -m.g(&m.phi_of(&x), &y))
    }));
    let lie = lie_derivative_metric(m, conn, &xi);
    out.push(check_vectors("(L_xi g)(X,Y) = 0", 2, d, |ix| {
        scalar_pair(lie.get(ix).clone(), Rat::zero())
    }));
    out.push(check_vectors("S(X, xi) = 2n eta(X)", 1, d, |ix| {
        let x = e(ix[0]);
        scalar_pair(pack.s(&x, &xi), &two_n * m.eta_of(&x))
    }));
    let shift = rat::int(2 * m.half_dim() as i64 - 1);
    out.push(check_vectors("S*(X,Y) = S(X,Y) - (2n-1)g(X,Y) - eta(X)eta(Y)", 2, d, |ix| {
        let (x, y) = (e(ix[0]), e(ix[1]));
        scalar_pair(
            pack.star_ricci.bilinear(&x, &y),
            pack.s(&x, &y) - &shift * m.g(&x, &y) - m.eta_of(&x) * m.eta_of(&y),
        )
    }));
    let mut constant = check_vectors("R(X,Y)Z = g(Y,Z)X - g(X,Z)Y", 3, d, |ix| {
        let (x, y, z) = (e(ix[0]), e(ix[1]), e(ix[2]));
        let rhs = vector::sub(&vector::scale(&m.g(&y, &z), &x), &vector::scale(&m.g(&x, &z), &y));
        (pack.r(&x, &y, &z), rhs)
    });
    constant.required = false;
    out.push(constant);
    out
}

/// Symmetries every Levi-Civita curvature tensor has, regardless of
/// structure: torsion-freeness, metric compatibility, first Bianchi,
/// antisymmetries, pair symmetry, and Ricci symmetry.
pub fn classical_identity_suite(m: &FrameManifold, conn: &Connection, pack: &CurvaturePack) -> Vec<IdentityCheck> {
    let d = m.dim();
    let e = |i: usize| m.basis(i);
    let rl = |x: usize, y: usize, z: usize, w: usize| m.g(&pack.riemann.curvature_basis(x, y, z), &e(w));
    let witness = |name: &'static str, defect: Option<[usize; 3]>| IdentityCheck {
        name,
        required: true,
        flag: match defect {
            None => Flag::pass(),
            Some(ix) => Flag::fail(name, &ix, "component mismatch".into()),
        },
    };
    vec![
        witness("torsion free", conn.torsion_defect(m)),
        witness("metric compatible", conn.compatibility_defect(m)),
        check_vectors("R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0", 3, d, |ix| {
            let (x, y, z) = (ix[0], ix[1], ix[2]);
            let r = &pack.riemann;
            let s = vector::add(
                &vector::add(&r.curvature_basis(x, y, z), &r.curvature_basis(y, z, x)),
                &r.curvature_basis(z, x, y),
            );
            (s, vector::zeros(d))
        }),
        check_vectors("g(R(X,Y)Z,W) = -g(R(Y,X)Z,W) = -g(R(X,Y)W,Z) = g(R(Z,W)X,Y)", 4, d, |ix| {
            let (x, y, z, w) = (ix[0], ix[1], ix[2], ix[3]);
            let base = rl(x, y, z, w);
            (
                vec![base.clone(), base.clone(), base],
                vec![-rl(y, x, z, w), -rl(x, y, w, z), rl(z, w, x, y)],
            )
        }),
        check_vectors("S(X,Y) = S(Y,X)", 2, d, |ix| {
            scalar_pair(pack.ricci.get(&[ix[0], ix[1]]).clone(), pack.ricci.get(&[ix[1], ix[0]]).clone())
        }),
    ]
}

//! Almost contact, contact metric, K-contact, normal and Sasakian checks.

use num_traits::Zero;

use super::FrameManifold;
use crate::curvature::{lie_derivative_metric, Connection};
use crate::kernel::rat::{self, Rat};
use crate::kernel::{vector, Slot, Tensor};

/// First failing instance of an identity. `indices` are 1-based frame
/// indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub identity: String,
    pub indices: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Flag {
    pub fn pass() -> Self {
        Self {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(identity: &str, indices: &[usize], detail: String) -> Self {
        Self {
            holds: false,
            witness: Some(Witness {
                identity: identity.to_string(),
                indices: indices.iter().map(|i| i + 1).collect(),
                detail,
            }),
        }
    }

    fn requires(prerequisite: &str) -> Self {
        Self {
            holds: false,
            witness: Some(Witness {
                identity: format!("requires {prerequisite}"),
                indices: Vec::new(),
                detail: format!("{prerequisite} structure check failed"),
            }),
        }
    }
}

/// Classification flags. `sasakian => contact_metric => almost_contact_metric`
/// and `k_contact => contact_metric` hold by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureClass {
    pub almost_contact_metric: Flag,
    pub contact_metric: Flag,
    pub killing_reeb: Flag,
    pub k_contact: Flag,
    pub normal: Flag,
    pub sasakian: Flag,
}

/// Checks every almost contact metric identity on the frame and returns the
/// first failure.
pub fn validate_almost_contact(m: &FrameManifold) -> Flag {
    let d = m.dim();
    let e = |i: usize| m.basis(i);
    let xi = m.xi().to_vec();

    for j in 0..d {
        let lhs = m.phi_of(&m.phi_of(&e(j)));
        let rhs = vector::add(&vector::scale(&-rat::one(), &e(j)), &vector::scale(&m.eta()[j], &xi));
        if lhs != rhs {
            return Flag::fail(
                "phi^2 X = -X + eta(X) xi",
                &[j],
                format!("phi^2(e{}) = {} but expected {}", j + 1, vector::render(&lhs), vector::render(&rhs)),
            );
        }
    }
    let eta_xi = m.eta_of(&xi);
    if eta_xi != rat::one() {
        return Flag::fail("eta(xi) = 1", &[], format!("eta(xi) = {}", rat::render(&eta_xi)));
    }
    for j in 0..d {
        let v = m.eta_of(&m.phi_of(&e(j)));
        if !v.is_zero() {
            return Flag::fail("eta o phi = 0", &[j], format!("eta(phi e{}) = {}", j + 1, rat::render(&v)));
        }
    }
    let phi_xi = m.phi_of(&xi);
    if !vector::is_zero(&phi_xi) {
        return Flag::fail("phi xi = 0", &[], format!("phi(xi) = {}", vector::render(&phi_xi)));
    }
    for i in 0..d {
        for j in 0..d {
            let lhs = m.g(&m.phi_of(&e(i)), &m.phi_of(&e(j)));
            let rhs = m.metric().get(&[i, j]) - &m.eta()[i] * &m.eta()[j];
            if lhs != rhs {
                return Flag::fail(
                    "g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)",
                    &[i, j],
                    format!("{} != {}", rat::render(&lhs), rat::render(&rhs)),
                );
            }
        }
    }
    for i in 0..d {
        for j in 0..d {
            let lhs = m.g(&e(i), &m.phi_of(&e(j)));
            let rhs = -m.g(&m.phi_of(&e(i)), &e(j));
            if lhs != rhs {
                return Flag::fail(
                    "g(X, phi Y) = -g(phi X, Y)",
                    &[i, j],
                    format!("{} != {}", rat::render(&lhs), rat::render(&rhs)),
                );
            }
        }
    }
    for i in 0..d {
        let lhs = m.g(&e(i), &xi);
        if lhs != m.eta()[i] {
            return Flag::fail(
                "g(X, xi) = eta(X)",
                &[i],
                format!("{} != {}", rat::render(&lhs), rat::render(&m.eta()[i])),
            );
        }
    }
    Flag::pass()
}

/// `d eta(e_i, e_j) = -1/2 sum_k C^k_{ij} eta_k` (the frame-derivative
/// terms vanish because eta has constant components).
pub fn exterior_derivative_eta(m: &FrameManifold) -> Tensor {
    let half = rat::frac(-1, 2);
    Tensor::from_fn(m.dim(), &[Slot::Lower, Slot::Lower], |ix| {
        let s: Rat = (0..m.dim())
            .map(|k| m.brackets().get(&[k, ix[0], ix[1]]) * &m.eta()[k])
            .sum();
        &half * s
    })
}

/// Nijenhuis torsion `[phi,phi](e_i, e_j)` stored as `[k, i, j]`.
pub fn nijenhuis(m: &FrameManifold) -> Tensor {
    let d = m.dim();
    let mut t = Tensor::zeros(d, &[Slot::Upper, Slot::Lower, Slot::Lower]);
    for i in 0..d {
        for j in 0..d {
            let (x, y) = (m.basis(i), m.basis(j));
            let (px, py) = (m.phi_of(&x), m.phi_of(&y));
            let mut v = m.phi_of(&m.phi_of(&m.bracket(&x, &y)));
            v = vector::add(&v, &m.bracket(&px, &py));
            v = vector::sub(&v, &m.phi_of(&m.bracket(&px, &y)));
            v = vector::sub(&v, &m.phi_of(&m.bracket(&x, &py)));
            for (k, c) in v.into_iter().enumerate() {
                t.set(&[k, i, j], c);
            }
        }
    }
    t
}

/// Full classification. `conn` must be the Levi-Civita connection of `m`.
pub fn classify_contact(m: &FrameManifold, conn: &Connection) -> StructureClass {
    let d = m.dim();
    let acm = validate_almost_contact(m);
    let deta = exterior_derivative_eta(m);

    let contact = if !acm.holds {
        Flag::requires("almost contact metric")
    } else {
        let mut flag = Flag::pass();
        'outer: for i in 0..d {
            for j in 0..d {
                let rhs = m.g(&m.basis(i), &m.phi_of(&m.basis(j)));
                if *deta.get(&[i, j]) != rhs {
                    flag = Flag::fail(
                        "d eta(X, Y) = g(X, phi Y)",
                        &[i, j],
                        format!("d eta = {} but g(X, phi Y) = {}", rat::render(deta.get(&[i, j])), rat::render(&rhs)),
                    );
                    break 'outer;
                }
            }
        }
        flag
    };

    let lie = lie_derivative_metric(m, conn, m.xi());
    let killing = match lie.first_nonzero() {
        None => Flag::pass(),
        Some((ix, v)) => Flag::fail(
            "(L_xi g)(X, Y) = 0",
            &ix,
            format!("(L_xi g)(e{}, e{}) = {}", ix[0] + 1, ix[1] + 1, rat::render(&v)),
        ),
    };
    let k_contact = if !contact.holds {
        Flag::requires("contact metric")
    } else {
        killing.clone()
    };

    let normal = if !acm.holds {
        Flag::requires("almost contact metric")
    } else {
        let n = nijenhuis(m);
        let two = rat::int(2);
        let mut flag = Flag::pass();
        'normal: for i in 0..d {
            for j in 0..d {
                let nij: Vec<Rat> = (0..d).map(|k| n.get(&[k, i, j]).clone()).collect();
                let v = vector::add(&vector::scale(&(&two * deta.get(&[i, j])), m.xi()), &nij);
                if !vector::is_zero(&v) {
                    flag = Flag::fail(
                        "2 d eta(X, Y) xi + [phi,phi](X, Y) = 0",
                        &[i, j],
                        format!("left side is {}", vector::render(&v)),
                    );
                    break 'normal;
                }
            }
        }
        flag
    };

    let sasakian = if !contact.holds {
        Flag::requires("contact metric")
    } else if !normal.holds {
        normal.clone()
    } else {
        Flag::pass()
    };

    StructureClass {
        almost_contact_metric: acm,
        contact_metric: contact,
        killing_reeb: killing,
        k_contact,
        normal,
        sasakian,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::curvature::levi_civita;
    use crate::kernel::rat::int;
    use crate::manifold::ManifoldData;

    fn classify(name: &str) -> StructureClass {
        let m = builtins::manifold(name).unwrap();
        classify_contact(&m, &levi_civita(&m))
    }

    #[test]
    fn almost_contact_on_builtins() {
        for name in builtins::NAMES {
            let m = builtins::manifold(name).unwrap();
            assert!(validate_almost_contact(&m).holds, "{name}");
        }
    }

    #[test]
    fn zero_phi_fails_first_identity() {
        let mut data: ManifoldData = builtins::data("heisenberg5").unwrap();
        data.phi = vec![vec![int(0); 5]; 5];
        let m = FrameManifold::new(data).unwrap();
        let flag = validate_almost_contact(&m);
        assert!(!flag.holds);
        let w = flag.witness.unwrap();
        assert_eq!(w.identity, "phi^2 X = -X + eta(X) xi");
        assert_eq!(w.indices, vec![1]);
    }

    #[test]
    fn d_eta_values() {
        let m = builtins::manifold("heisenberg5").unwrap();
        let de = exterior_derivative_eta(&m);
        assert_eq!(*de.get(&[0, 1]), int(-1));
        assert_eq!(*de.get(&[0, 3]), int(0));
        // g(e1, phi e2) = g(e1, -e1) = -1
        assert_eq!(m.g(&m.basis(0), &m.phi_of(&m.basis(1))), int(-1));
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(*de.get(&[i, j]), -de.get(&[j, i]).clone());
            }
        }
        assert!(exterior_derivative_eta(&builtins::manifold("abelian5").unwrap()).is_zero());
    }

    #[test]
    fn nijenhuis_values() {
        let m = builtins::manifold("heisenberg5").unwrap();
        let n = nijenhuis(&m);
        let col = |i: usize, j: usize| (0..5).map(|k| n.get(&[k, i, j]).clone()).collect::<Vec<_>>();
        assert_eq!(col(0, 1), vector::scale(&int(2), &m.basis(2)));
        assert!(vector::is_zero(&col(0, 2)));
        assert!(nijenhuis(&builtins::manifold("abelian5").unwrap()).is_zero());
    }

    #[test]
    fn builtin_classes() {
        for name in ["heisenberg5", "heisenberg3", "sphere3"] {
            let c = classify(name);
            assert!(c.sasakian.holds, "{name}: {:?}", c.sasakian);
            assert!(c.k_contact.holds, "{name}");
        }
        let flat = classify("abelian5");
        assert!(flat.almost_contact_metric.holds);
        assert!(!flat.contact_metric.holds);
        assert!(!flat.sasakian.holds);
        assert_eq!(
            flat.contact_metric.witness.unwrap().identity,
            "d eta(X, Y) = g(X, phi Y)"
        );
    }

    #[test]
    fn classification_survives_relabeling() {
        let m = builtins::manifold("heisenberg5").unwrap();
        for perm in [[4, 3, 2, 1, 0], [2, 0, 1, 4, 3], [1, 0, 3, 2, 4]] {
            let p = m.relabeled(&perm);
            let c = classify_contact(&p, &levi_civita(&p));
            assert!(c.sasakian.holds, "{perm:?}");
        }
    }
}

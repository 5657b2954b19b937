//! Soliton equations, exact solving for `(λ, μ)`, Einstein-type fits and the
//! theorem harness.
//!
//! Every variant is written in one form,
//! `L_V g + 2T + 2λ̃ g + 2μ η⊗η = 0`, with `T` either `S` or `S*`. For the
//! conformal variants `λ̃ = λ - (1/2)(p + 2/dim)`, so the free pressure `p`
//! never enters the solve; `λ` is reported as an affine expression in `p`.

use num_traits::{One, Zero};

use crate::curvature::{lie_derivative_metric, nabla_ricci, Connection, CurvaturePack};
use crate::derived::{
    derivation_condition, phi_flatness, pseudo_projective_branch_factor, ConditionKind, ConditionReport,
    FlatnessKind, PseudoProjectiveParams,
};
use crate::kernel::rat::{self, Rat};
use crate::kernel::{solve_exact, LinearSystem, Parametric, Solution, Tensor, Vector};
use crate::manifold::{classify_contact, FrameManifold};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TensorChoice {
    Ricci,
    StarRicci,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolitonVariant {
    pub tensor: TensorChoice,
    pub conformal: bool,
    pub eta_term: bool,
    /// Potential field in frame components; `None` means `xi`.
    pub potential: Option<Vector>,
}

impl SolitonVariant {
    pub const NAMES: [&'static str; 5] = [
        "ricci",
        "eta-ricci",
        "conformal-eta-ricci",
        "star-ricci",
        "star-conformal-eta",
    ];

    pub fn named(name: &str) -> Option<Self> {
        let (tensor, conformal, eta_term) = match name {
            "ricci" => (TensorChoice::Ricci, false, false),
            "eta-ricci" => (TensorChoice::Ricci, false, true),
            "conformal-eta-ricci" => (TensorChoice::Ricci, true, true),
            "star-ricci" => (TensorChoice::StarRicci, false, false),
            "star-conformal-eta" => (TensorChoice::StarRicci, true, true),
            _ => return None,
        };
        Some(Self {
            tensor,
            conformal,
            eta_term,
            potential: None,
        })
    }

    pub fn star_conformal_eta() -> Self {
        Self::named("star-conformal-eta").expect("known variant")
    }

    pub fn with_potential(mut self, v: Vector) -> Self {
        self.potential = Some(v);
        self
    }

    /// Name of the matching preset, ignoring the potential.
    pub fn name(&self) -> Option<&'static str> {
        Self::NAMES.into_iter().find(|n| {
            let p = Self::named(n).expect("known variant");
            (p.tensor, p.conformal, p.eta_term) == (self.tensor, self.conformal, self.eta_term)
        })
    }

    pub fn potential_in(&self, m: &FrameManifold) -> Vector {
        self.potential.clone().unwrap_or_else(|| m.xi().to_vec())
    }

    fn tensor_in<'a>(&self, pack: &'a CurvaturePack) -> &'a Tensor {
        match self.tensor {
            TensorChoice::Ricci => &pack.ricci,
            TensorChoice::StarRicci => &pack.star_ricci,
        }
    }
}

/// `L_V g + 2T`, the part of the residual that does not depend on the
/// unknowns.
fn residual_base(m: &FrameManifold, pack: &CurvaturePack, conn: &Connection, variant: &SolitonVariant) -> Tensor {
    let lie = lie_derivative_metric(m, conn, &variant.potential_in(m));
    lie.plus_scaled(&rat::int(2), variant.tensor_in(pack))
}

/// `L_V g + 2T + 2λ̃ g + 2μ η⊗η`. `mu` is ignored when the variant has no
/// eta term.
pub fn soliton_residual(
    m: &FrameManifold,
    pack: &CurvaturePack,
    conn: &Connection,
    variant: &SolitonVariant,
    lambda_shifted: &Rat,
    mu: &Rat,
) -> Tensor {
    let two = rat::int(2);
    let mut out = residual_base(m, pack, conn, variant).plus_scaled(&(&two * lambda_shifted), m.metric());
    if variant.eta_term {
        out = out.plus_scaled(&(&two * mu), &m.eta_eta());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolitonStatus {
    Unique,
    Parametric,
    None,
}

impl SolitonStatus {
    pub fn label(self) -> &'static str {
        match self {
            Self::Unique => "unique",
            Self::Parametric => "parametric",
            Self::None => "none",
        }
    }
}

/// `λ = constant + p_coefficient * p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineInP {
    pub constant: Rat,
    pub p_coefficient: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolitonSolution {
    pub variant: SolitonVariant,
    pub dim: usize,
    pub status: SolitonStatus,
    /// Set when `status` is unique.
    pub lambda_shifted: Option<Rat>,
    /// Set when `status` is unique; always zero for variants without an eta
    /// term.
    pub mu: Option<Rat>,
    pub lambda_affine: Option<AffineInP>,
    /// `λ̃ + μ = 0`, evaluated for the `*`-conformal eta variant only.
    pub constraint: Option<bool>,
    /// Solution family over `[λ̃, μ]` when `status` is parametric.
    pub family: Option<Parametric>,
}

impl SolitonSolution {
    pub fn is_unique(&self) -> bool {
        self.status == SolitonStatus::Unique
    }

    /// `(λ̃, μ)` for a unique solution.
    pub fn values(&self) -> Option<(&Rat, &Rat)> {
        Some((self.lambda_shifted.as_ref()?, self.mu.as_ref()?))
    }

    /// The conformal shift `(1/2)(p + 2/dim)` as text.
    fn shift(&self, spaced: bool) -> String {
        if spaced {
            format!("(1/2)(p + 2/{})", self.dim)
        } else {
            format!("(1/2)(p+2/{})", self.dim)
        }
    }

    /// `λ` written out, e.g. `λ = 5 + (1/2)(p + 2/5)`.
    pub fn render_lambda(&self) -> Option<String> {
        let lt = self.lambda_shifted.as_ref()?;
        Some(if !self.variant.conformal {
            format!("λ = {}", rat::render(lt))
        } else if lt.is_zero() {
            format!("λ = {}", self.shift(true))
        } else {
            format!("λ = {} + {}", rat::render(lt), self.shift(true))
        })
    }

    /// `λ + μ = (1/2)(p+2/dim): satisfied` or the violated form.
    pub fn render_constraint(&self) -> Option<String> {
        let ok = self.constraint?;
        Some(if ok {
            format!("λ+μ = {}: satisfied", self.shift(false))
        } else {
            let (lt, mu) = self.values()?;
            format!(
                "λ+μ = {} + {}: violated (expected λ+μ = {})",
                rat::render(&(lt + mu)),
                self.shift(false),
                self.shift(false)
            )
        })
    }

    /// One-line summary, e.g. `unique: λ̃=5, μ=-5; λ+μ = (1/2)(p+2/5): satisfied`.
    pub fn summary(&self) -> String {
        match self.status {
            SolitonStatus::Unique => {
                let (lt, mu) = self.values().expect("unique solution has values");
                let mut s = format!("unique: λ̃={}, μ={}", rat::render(lt), rat::render(mu));
                if let Some(c) = self.render_constraint() {
                    s.push_str("; ");
                    s.push_str(&c);
                }
                s
            }
            SolitonStatus::Parametric => {
                let fam = self.family.as_ref().expect("parametric solution has a family");
                format!(
                    "parametric: ({}) + span of {} direction(s)",
                    fam.particular.iter().map(rat::render).collect::<Vec<_>>().join(", "),
                    fam.directions.len()
                )
            }
            SolitonStatus::None => "none: no (λ̃, μ) solves the soliton equation".to_string(),
        }
    }
}

/// Stacks all `dim^2` residual equations in the unknowns `λ̃` (and `μ` when
/// the variant has an eta term) and solves them exactly.
pub fn solve_soliton(
    m: &FrameManifold,
    pack: &CurvaturePack,
    conn: &Connection,
    variant: &SolitonVariant,
) -> SolitonSolution {
    let d = m.dim();
    let base = residual_base(m, pack, conn, variant);
    let eta_eta = m.eta_eta();
    let two = rat::int(2);
    let mut sys = if variant.eta_term {
        LinearSystem::new(["lambda_shifted", "mu"])
    } else {
        LinearSystem::new(["lambda_shifted"])
    };
    for i in 0..d {
        for j in 0..d {
            let mut row = vec![&two * m.metric().get(&[i, j])];
            if variant.eta_term {
                row.push(&two * eta_eta.get(&[i, j]));
            }
            sys.push(row, -base.get(&[i, j]).clone());
        }
    }

    let mut out = SolitonSolution {
        variant: variant.clone(),
        dim: d,
        status: SolitonStatus::None,
        lambda_shifted: None,
        mu: None,
        lambda_affine: None,
        constraint: None,
        family: None,
    };
    match solve_exact(&sys) {
        Solution::Unique(x) => {
            let lt = x[0].clone();
            let mu = if variant.eta_term { x[1].clone() } else { Rat::zero() };
            out.status = SolitonStatus::Unique;
            out.lambda_affine = Some(if variant.conformal {
                AffineInP {
                    constant: &lt + rat::frac(1, d as i64),
                    p_coefficient: rat::frac(1, 2),
                }
            } else {
                AffineInP {
                    constant: lt.clone(),
                    p_coefficient: Rat::zero(),
                }
            });
            if variant.name() == Some("star-conformal-eta") {
                out.constraint = Some((&lt + &mu).is_zero());
            }
            out.lambda_shifted = Some(lt);
            out.mu = Some(mu);
        }
        Solution::Underdetermined(p) => {
            out.status = SolitonStatus::Parametric;
            out.family = Some(p);
        }
        Solution::Inconsistent => {}
    }
    out
}

/// Fit of a symmetric tensor as `αg` or `αg + βη⊗η`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EinsteinClass {
    Einstein { alpha: Rat },
    EtaEinstein { alpha: Rat, beta: Rat },
    StarEinstein { alpha: Rat },
    StarEtaEinstein { alpha: Rat, beta: Rat },
    None,
}

impl EinsteinClass {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Einstein { .. } => "einstein",
            Self::EtaEinstein { .. } => "eta_einstein",
            Self::StarEinstein { .. } => "star_einstein",
            Self::StarEtaEinstein { .. } => "star_eta_einstein",
            Self::None => "none",
        }
    }

    pub fn alpha(&self) -> Option<&Rat> {
        match self {
            Self::Einstein { alpha }
            | Self::EtaEinstein { alpha, .. }
            | Self::StarEinstein { alpha }
            | Self::StarEtaEinstein { alpha, .. } => Some(alpha),
            Self::None => None,
        }
    }

    pub fn beta(&self) -> Option<&Rat> {
        match self {
            Self::EtaEinstein { beta, .. } | Self::StarEtaEinstein { beta, .. } => Some(beta),
            _ => None,
        }
    }
}

/// `Some(coefficients)` if `t` is exactly a combination of `basis`.
fn fit(t: &Tensor, basis: &[&Tensor]) -> Option<Vec<Rat>> {
    let mut sys = LinearSystem::new((0..basis.len()).map(|i| format!("c{i}")));
    for (flat, v) in t.components().iter().enumerate() {
        sys.push(basis.iter().map(|b| b.components()[flat].clone()).collect(), v.clone());
    }
    match solve_exact(&sys) {
        Solution::Unique(x) => Some(x),
        _ => None,
    }
}

fn classify_one(m: &FrameManifold, t: &Tensor, star: bool) -> EinsteinClass {
    let eta_eta = m.eta_eta();
    if let Some(x) = fit(t, &[m.metric()]) {
        let alpha = x[0].clone();
        return if star {
            EinsteinClass::StarEinstein { alpha }
        } else {
            EinsteinClass::Einstein { alpha }
        };
    }
    match fit(t, &[m.metric(), &eta_eta]) {
        Some(x) => {
            let (alpha, beta) = (x[0].clone(), x[1].clone());
            if star {
                EinsteinClass::StarEtaEinstein { alpha, beta }
            } else {
                EinsteinClass::EtaEinstein { alpha, beta }
            }
        }
        None => EinsteinClass::None,
    }
}

/// Einstein-type classes of `S` and `S*`, preferring `β = 0`.
pub fn classify_einstein(m: &FrameManifold, pack: &CurvaturePack) -> (EinsteinClass, EinsteinClass) {
    (classify_one(m, &pack.ricci, false), classify_one(m, &pack.star_ricci, true))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremEntry {
    pub id: &'static str,
    /// What the theorem concludes, in shifted variables.
    pub claim: String,
    pub hypothesis_holds: bool,
    /// `None` when the hypothesis fails.
    pub conclusion_holds: Option<bool>,
    /// Short form shown next to the conclusion verdict, e.g. `μ=1`.
    pub summary: String,
    pub details: String,
}

impl TheoremEntry {
    pub fn is_violation(&self) -> bool {
        self.hypothesis_holds && self.conclusion_holds == Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub entries: Vec<TheoremEntry>,
}

impl TheoremReport {
    pub fn violations(&self) -> impl Iterator<Item = &TheoremEntry> {
        self.entries.iter().filter(|e| e.is_violation())
    }

    pub fn entry(&self, id: &str) -> Option<&TheoremEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

fn condition_text(label: &str, rep: &ConditionReport) -> String {
    match &rep.witness {
        None => format!("{label} holds"),
        Some(w) => format!(
            "{label} fails at ({})",
            w.indices.iter().map(|i| format!("e{i}")).collect::<Vec<_>>().join(",")
        ),
    }
}

/// `S == αg + βη⊗η` exactly.
fn ricci_is(m: &FrameManifold, pack: &CurvaturePack, alpha: &Rat, beta: &Rat) -> bool {
    m.metric().scaled(alpha).plus_scaled(beta, &m.eta_eta()) == pack.ricci
}

/// Checks each theorem mechanically on `m`. The hypothesis is always
/// "Sasakian, a unique `*`-conformal eta soliton exists, and the stated
/// curvature condition holds"; conclusions are compared in `(λ̃, μ)`.
pub fn verify_theorems(
    m: &FrameManifold,
    pack: &CurvaturePack,
    conn: &Connection,
    params: &PseudoProjectiveParams,
) -> TheoremReport {
    let n = m.half_dim() as i64;
    let int = rat::int;
    let class = classify_contact(m, conn);
    let sol = solve_soliton(m, pack, conn, &SolitonVariant::star_conformal_eta());

    let base_failure = if !class.sasakian.holds {
        Some("not Sasakian".to_string())
    } else if !sol.is_unique() {
        Some(format!("no unique soliton ({})", sol.status.label()))
    } else {
        None
    };
    let (lt, mu) = sol
        .values()
        .map(|(a, b)| (a.clone(), b.clone()))
        .unwrap_or_else(|| (Rat::zero(), Rat::zero()));
    let solved = format!("solved λ̃={}, μ={}", rat::render(&lt), rat::render(&mu));

    let mut entries = Vec::new();
    let mut push = |id: &'static str,
                    claim: String,
                    condition: Result<(bool, String), String>,
                    conclusion: &dyn Fn() -> (bool, String, String)| {
        let (hyp, hyp_text) = match (&base_failure, condition) {
            (Some(why), _) => (false, why.clone()),
            (None, Err(why)) => (false, why),
            (None, Ok((holds, text))) => (holds, text),
        };
        let (conclusion_holds, summary, details) = if hyp {
            let (ok, summary, detail) = conclusion();
            (Some(ok), summary, format!("{hyp_text}; {detail}"))
        } else {
            (None, String::new(), hyp_text)
        };
        entries.push(TheoremEntry {
            id,
            claim,
            hypothesis_holds: hyp,
            conclusion_holds,
            summary,
            details,
        });
    };

    let values_conclusion = |want_lt: Rat, want_mu: Rat| {
        let solved = solved.clone();
        let (lt, mu) = (lt.clone(), mu.clone());
        move || {
            let ok = lt == want_lt && mu == want_mu;
            let summary = format!("μ={}", rat::render(&mu));
            let detail = format!(
                "expected λ̃={}, μ={}; {solved}",
                rat::render(&want_lt),
                rat::render(&want_mu)
            );
            (ok, summary, detail)
        }
    };
    let ricci_conclusion = |alpha: Rat, beta: Rat| {
        move || {
            let ok = ricci_is(m, pack, &alpha, &beta);
            let form = if beta.is_zero() {
                format!("S = {}g", rat::render_grouped(&alpha))
            } else {
                format!("S = {}g + {}η⊗η", rat::render_grouped(&alpha), rat::render_grouped(&beta))
            };
            let detail = if ok { format!("{form} exactly") } else { format!("{form} fails") };
            (ok, form, detail)
        }
    };

    let nabla = nabla_ricci(m, conn, &pack.ricci);
    push(
        "Thm 3.1",
        "cyclic sum of nabla S vanishes".into(),
        Ok((true, "soliton exists".into())),
        &|| {
            let ok = nabla.cyclic.is_zero();
            let detail = match nabla.cyclic.first_nonzero() {
                None => "cyclic sum of nabla S is zero on all triples".to_string(),
                Some((ix, v)) => format!(
                    "cyclic sum at (e{},e{},e{}) is {}",
                    ix[0] + 1,
                    ix[1] + 1,
                    ix[2] + 1,
                    rat::render(&v)
                ),
            };
            (ok, "cyclic Ricci".into(), detail)
        },
    );

    let nabla_zero = match nabla.nabla.first_nonzero() {
        None => (true, "nabla S = 0".to_string()),
        Some((ix, v)) => (
            false,
            format!(
                "nabla S != 0: (nabla_e{} S)(e{},e{}) = {}",
                ix[0] + 1,
                ix[1] + 1,
                ix[2] + 1,
                rat::render(&v)
            ),
        ),
    };
    push("Thm 3.2", "μ=1, λ̃=-1".into(), Ok(nabla_zero), &values_conclusion(int(-1), int(1)));

    let cond = |kind: ConditionKind, label: &str| -> Result<(bool, String), String> {
        derivation_condition(m, pack, kind, Some(params))
            .map(|rep| (rep.holds, condition_text(label, &rep)))
            .map_err(|e| e.to_string())
    };
    let r_xi_s = cond(ConditionKind::RXiDotS, "R(xi,X).S = 0");
    push("Thm 4.1", "μ=1, λ̃=-1".into(), r_xi_s.clone(), &values_conclusion(int(-1), int(1)));
    push("Cor 4.2", format!("S = {}g", 2 * n), r_xi_s, &ricci_conclusion(int(2 * n), int(0)));

    let s_xi_r = cond(ConditionKind::SXiDotR, "S(xi,X).R = 0");
    push(
        "Thm 4.3",
        format!("μ={}, λ̃={}", 1 - 4 * n, 4 * n - 1),
        s_xi_r.clone(),
        &values_conclusion(int(4 * n - 1), int(1 - 4 * n)),
    );
    push(
        "Cor 4.4",
        format!("S = {}g + {}η⊗η", -2 * n, 4 * n),
        s_xi_r,
        &ricci_conclusion(int(-2 * n), int(4 * n)),
    );

    let pbar = cond(ConditionKind::PbarXiDotS, "Pbar(xi,X).S = 0");
    let r = params.effective_r(pack);
    let factor = pseudo_projective_branch_factor(m, params, &r);
    let r_text = if params.r_override().is_some() {
        format!("r = {} (override)", rat::render(&r))
    } else {
        format!("r = {}", rat::render(&r))
    };
    let branch_4_27 = (int(2 * n * (2 * n + 1) + 1) * params.a()) + int(2 * n) * params.b();
    let branch_text = {
        let mut s = format!(
            "branch a - r/{}(a/{} + b) = {} with {r_text}",
            2 * n + 1,
            2 * n,
            rat::render(&factor)
        );
        if params.r_override() == Some(&int(-1)) {
            s.push_str(&format!(
                "; [2n(2n+1)+1]a + 2nb = {}",
                rat::render(&branch_4_27)
            ));
        }
        s
    };
    {
        let (mu, lt, factor, branch_text) = (mu.clone(), lt.clone(), factor.clone(), branch_text.clone());
        push(
            "Thm 4.5",
            "μ=1, λ̃=-1, or the (a, b) branch equation".into(),
            pbar.clone(),
            &move || {
                let values = mu.is_one() && lt == int(-1);
                let branch = factor.is_zero();
                let summary = if values {
                    format!("μ={}", rat::render(&mu))
                } else if branch {
                    "branch equation".to_string()
                } else {
                    format!("μ={}", rat::render(&mu))
                };
                (values || branch, summary, branch_text.clone())
            },
        );
    }
    let note_hyp = pbar.map(|(holds, text)| {
        if factor.is_zero() {
            (false, format!("{text}; branch equation holds"))
        } else {
            (holds, format!("{text}; branch factor {} != 0", rat::render(&factor)))
        }
    });
    push("Note 4.5", format!("S = {}g", 2 * n), note_hyp, &ricci_conclusion(int(2 * n), int(0)));

    let flat = |kind: FlatnessKind| -> Result<(bool, String), String> {
        phi_flatness(m, pack, kind)
            .map(|rep| {
                let text = match &rep.witness {
                    None => format!("{} holds", rep.kind.label()),
                    Some(w) => format!(
                        "not {}: witness ({})",
                        rep.kind.label(),
                        w.indices.iter().map(|i| format!("e{i}")).collect::<Vec<_>>().join(",")
                    ),
                };
                (rep.holds, text)
            })
            .map_err(|e| e.to_string())
    };
    let conharmonic_flat = flat(FlatnessKind::Conharmonic);
    push(
        "Thm 4.7",
        format!("μ={}, λ̃={}", -2 * n, 2 * n),
        conharmonic_flat.clone(),
        &values_conclusion(int(2 * n), int(-2 * n)),
    );
    push(
        "Cor 4.8",
        format!("S = -g + {}η⊗η", 2 * n + 1),
        conharmonic_flat,
        &ricci_conclusion(int(-1), int(2 * n + 1)),
    );

    let projective_flat = flat(FlatnessKind::Projective);
    push("Thm 4.10", "μ=1, λ̃=-1".into(), projective_flat.clone(), &values_conclusion(int(-1), int(1)));
    push("Cor 4.11", format!("S = {}g", 2 * n), projective_flat, &ricci_conclusion(int(2 * n), int(0)));

    TheoremReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::curvature::levi_civita;
    use crate::kernel::rat::{frac, int};
    use crate::kernel::vector;

    struct Ctx {
        m: FrameManifold,
        conn: Connection,
        pack: CurvaturePack,
    }

    fn ctx(name: &str) -> Ctx {
        let m = builtins::manifold(name).unwrap();
        let conn = levi_civita(&m);
        let pack = CurvaturePack::new(&m, &conn);
        Ctx { m, conn, pack }
    }

    fn solve(c: &Ctx, variant: &str) -> SolitonSolution {
        solve_soliton(&c.m, &c.pack, &c.conn, &SolitonVariant::named(variant).unwrap())
    }

    #[test]
    fn variant_names_round_trip() {
        for name in SolitonVariant::NAMES {
            assert_eq!(SolitonVariant::named(name).unwrap().name(), Some(name));
        }
        assert!(SolitonVariant::named("gradient").is_none());
    }

    #[test]
    fn residual_examples() {
        let c = ctx("heisenberg5");
        let v = SolitonVariant::star_conformal_eta();
        assert!(soliton_residual(&c.m, &c.pack, &c.conn, &v, &int(5), &int(-5)).is_zero());
        let r0 = soliton_residual(&c.m, &c.pack, &c.conn, &v, &int(0), &int(0));
        assert_eq!(r0, c.pack.star_ricci.scaled(&int(2)));
        assert!(!r0.is_zero());

        let c = ctx("abelian5");
        let v = SolitonVariant::named("ricci").unwrap().with_potential(vector::zeros(5));
        assert!(soliton_residual(&c.m, &c.pack, &c.conn, &v, &int(0), &int(0)).is_zero());
    }

    #[test]
    fn headline_solution() {
        let c = ctx("heisenberg5");
        let s = solve(&c, "star-conformal-eta");
        assert_eq!(s.values(), Some((&int(5), &int(-5))));
        assert_eq!(s.constraint, Some(true));
        assert_eq!(
            s.lambda_affine,
            Some(AffineInP {
                constant: frac(26, 5),
                p_coefficient: frac(1, 2)
            })
        );
        assert_eq!(s.render_lambda().unwrap(), "λ = 5 + (1/2)(p + 2/5)");
        assert_eq!(s.summary(), "unique: λ̃=5, μ=-5; λ+μ = (1/2)(p+2/5): satisfied");
    }

    #[test]
    fn other_solutions() {
        let c = ctx("sphere3");
        let s = solve(&c, "star-conformal-eta");
        assert_eq!(s.values(), Some((&int(-1), &int(1))));
        assert!(s.summary().starts_with("unique: λ̃=-1, μ=1"));

        let c = ctx("abelian5");
        let s = solve(&c, "ricci");
        assert_eq!(s.summary(), "unique: λ̃=0, μ=0");

        // S = -2g + 6 η⊗η is not a multiple of g.
        let c = ctx("heisenberg5");
        assert_eq!(solve(&c, "ricci").status, SolitonStatus::None);
        let s = solve(&c, "eta-ricci");
        assert_eq!(s.values(), Some((&int(2), &int(-6))));
        assert_eq!(s.constraint, None);
    }

    #[test]
    fn einstein_classes() {
        let c = ctx("sphere3");
        let (s, star) = classify_einstein(&c.m, &c.pack);
        assert_eq!(s, EinsteinClass::Einstein { alpha: int(2) });
        assert_eq!(
            star,
            EinsteinClass::StarEtaEinstein {
                alpha: int(1),
                beta: int(-1)
            }
        );
        let c = ctx("heisenberg5");
        let (s, star) = classify_einstein(&c.m, &c.pack);
        assert_eq!(
            s,
            EinsteinClass::EtaEinstein {
                alpha: int(-2),
                beta: int(6)
            }
        );
        assert_eq!(
            star,
            EinsteinClass::StarEtaEinstein {
                alpha: int(-5),
                beta: int(5)
            }
        );
        let c = ctx("abelian5");
        assert_eq!(classify_einstein(&c.m, &c.pack).0, EinsteinClass::Einstein { alpha: int(0) });
    }

    fn theorems(name: &str, a: i64, b: i64, r: Option<Rat>) -> TheoremReport {
        let c = ctx(name);
        let p = PseudoProjectiveParams::new(int(a), int(b), r).unwrap();
        verify_theorems(&c.m, &c.pack, &c.conn, &p)
    }

    #[test]
    fn sphere_theorems() {
        let t = theorems("sphere3", 1, 1, None);
        let e = t.entry("Thm 4.1").unwrap();
        assert!(e.hypothesis_holds);
        assert_eq!(e.conclusion_holds, Some(true));
        assert_eq!(e.summary, "μ=1");
        assert_eq!(t.entry("Cor 4.2").unwrap().conclusion_holds, Some(true));
        assert_eq!(t.entry("Thm 4.10").unwrap().conclusion_holds, Some(true));
        assert_eq!(t.entry("Thm 4.3").unwrap().conclusion_holds, None);
        assert_eq!(t.violations().count(), 0);
    }

    #[test]
    fn heisenberg_theorems() {
        let t = theorems("heisenberg5", 1, 1, None);
        assert_eq!(t.entry("Thm 3.1").unwrap().conclusion_holds, Some(true));
        let e = t.entry("Thm 3.2").unwrap();
        assert!(!e.hypothesis_holds);
        assert!(e.details.contains("nabla S != 0"), "{}", e.details);
        assert_eq!(t.violations().count(), 0);
    }

    #[test]
    fn abelian_theorems_are_not_applicable() {
        let t = theorems("abelian5", 1, 1, None);
        for e in &t.entries {
            assert!(!e.hypothesis_holds, "{}", e.id);
            assert_eq!(e.details, "not Sasakian");
        }
    }

    #[test]
    fn branch_equation_under_override() {
        // n = 1: [2*3 + 1]a + 2b = 0 at (a, b) = (2, -7).
        let t = theorems("sphere3", 2, -7, Some(int(-1)));
        let e = t.entry("Thm 4.5").unwrap();
        if e.hypothesis_holds {
            assert_eq!(e.conclusion_holds, Some(true));
        }
        assert!(e.details.contains("[2n(2n+1)+1]a + 2nb = 0"), "{}", e.details);
    }
}

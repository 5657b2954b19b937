//! Full manifold report in text and JSON form. Every rational is rendered
//! exactly; frame indices are 1-based in both forms.

use serde::Serialize;

use crate::builtins;
use crate::curvature::{classical_identity_suite, levi_civita, sasakian_identity_suite, CurvaturePack, IdentityCheck};
use crate::derived::{
    derivation_condition, phi_flatness, ConditionKind, ConditionReport, DerivedError, FlatnessKind, FlatnessReport,
    PseudoProjectiveParams,
};
use crate::kernel::rat::{self, Rat};
use crate::kernel::{vector, Vector};
use crate::manifold::{classify_contact, Flag, FrameManifold, StructureClass};
use crate::soliton::{
    classify_einstein, solve_soliton, verify_theorems, EinsteinClass, SolitonSolution, SolitonVariant, TheoremEntry,
};

fn rats(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat::render).collect()
}

fn frame_tuple(indices: &[usize]) -> String {
    indices.iter().map(|i| format!("e{i}")).collect::<Vec<_>>().join(",")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ManifoldSummary {
    pub name: String,
    pub dimension: usize,
    pub n: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WitnessDto {
    pub identity: String,
    pub indices: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FlagDto {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDto>,
}

impl FlagDto {
    fn new(name: &str, flag: &Flag) -> Self {
        Self {
            name: name.to_string(),
            holds: flag.holds,
            witness: flag.witness.as_ref().map(|w| WitnessDto {
                identity: w.identity.clone(),
                indices: w.indices.clone(),
                detail: w.detail.clone(),
            }),
        }
    }

    fn line(&self) -> String {
        let mut s = format!("{}: {}", self.name, yes_no(self.holds));
        if let Some(w) = &self.witness {
            if w.indices.is_empty() {
                s.push_str(&format!(" ({}: {})", w.identity, w.detail));
            } else {
                s.push_str(&format!(" ({} at ({}): {})", w.identity, frame_tuple(&w.indices), w.detail));
            }
        }
        s
    }
}

/// Classification flags in reporting order.
pub fn structure_flags(class: &StructureClass) -> Vec<FlagDto> {
    vec![
        FlagDto::new("almost_contact_metric", &class.almost_contact_metric),
        FlagDto::new("contact_metric", &class.contact_metric),
        FlagDto::new("killing_reeb", &class.killing_reeb),
        FlagDto::new("k_contact", &class.k_contact),
        FlagDto::new("normal", &class.normal),
        FlagDto::new("sasakian", &class.sasakian),
    ]
}

/// Text form of the classification, one `name: yes|no` line per flag.
pub fn render_structure(flags: &[FlagDto]) -> String {
    flags.iter().map(|f| f.line() + "\n").collect()
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConnectionEntry {
    /// `[i, j]` for `nabla_{e_i} e_j`.
    pub indices: [usize; 2],
    pub value: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CurvatureEntry {
    /// `[i, j, k]` for `R(e_i, e_j) e_k`.
    pub indices: [usize; 3],
    pub value: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum EinsteinDto {
    Einstein { alpha: String },
    EtaEinstein { alpha: String, beta: String },
    StarEinstein { alpha: String },
    StarEtaEinstein { alpha: String, beta: String },
    None,
}

impl From<&EinsteinClass> for EinsteinDto {
    fn from(c: &EinsteinClass) -> Self {
        let r = rat::render;
        match c {
            EinsteinClass::Einstein { alpha } => Self::Einstein { alpha: r(alpha) },
            EinsteinClass::EtaEinstein { alpha, beta } => Self::EtaEinstein {
                alpha: r(alpha),
                beta: r(beta),
            },
            EinsteinClass::StarEinstein { alpha } => Self::StarEinstein { alpha: r(alpha) },
            EinsteinClass::StarEtaEinstein { alpha, beta } => Self::StarEtaEinstein {
                alpha: r(alpha),
                beta: r(beta),
            },
            EinsteinClass::None => Self::None,
        }
    }
}

impl EinsteinDto {
    fn text(&self) -> String {
        match self {
            Self::Einstein { alpha } => format!("einstein (α = {alpha})"),
            Self::EtaEinstein { alpha, beta } => format!("eta_einstein (α = {alpha}, β = {beta})"),
            Self::StarEinstein { alpha } => format!("star_einstein (α = {alpha})"),
            Self::StarEtaEinstein { alpha, beta } => format!("star_eta_einstein (α = {alpha}, β = {beta})"),
            Self::None => "none".to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CurvatureSection {
    /// Nonzero `R(e_i, e_j) e_k`.
    pub riemann: Vec<CurvatureEntry>,
    pub ricci: Vec<Vec<String>>,
    pub scalar: String,
    pub star_ricci: Vec<Vec<String>>,
    pub ricci_class: EinsteinDto,
    pub star_ricci_class: EinsteinDto,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdentityDto {
    pub name: String,
    pub required: bool,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDto>,
}

impl From<&IdentityCheck> for IdentityDto {
    fn from(c: &IdentityCheck) -> Self {
        let f = FlagDto::new(c.name, &c.flag);
        Self {
            name: f.name,
            required: c.required,
            holds: f.holds,
            witness: f.witness,
        }
    }
}

impl IdentityDto {
    fn line(&self) -> String {
        let tag = match (self.holds, self.required) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "fail (informational)",
        };
        let mut s = format!("{tag} {}", self.name);
        if let Some(w) = &self.witness {
            if !w.indices.is_empty() {
                s.push_str(&format!(" at ({})", frame_tuple(&w.indices)));
            }
            s.push_str(&format!(": {}", w.detail));
        }
        s
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdentitySection {
    /// Only present when the manifold is Sasakian.
    pub sasakian: Vec<IdentityDto>,
    pub classical: Vec<IdentityDto>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConditionDto {
    pub kind: String,
    pub label: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_indices: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_value: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub contraction_identities: Vec<IdentityDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ConditionDto {
    fn from_condition(kind: ConditionKind, rep: Result<ConditionReport, DerivedError>) -> Self {
        let mut dto = Self {
            kind: kind.key().to_string(),
            label: kind.label().to_string(),
            holds: false,
            witness_indices: None,
            witness_value: None,
            notes: Vec::new(),
            contraction_identities: Vec::new(),
            error: None,
        };
        match rep {
            Ok(rep) => {
                dto.holds = rep.holds;
                dto.witness_indices = rep.witness.as_ref().map(|w| w.indices.clone());
                dto.witness_value = rep.witness.as_ref().map(|w| rats(&w.value));
                dto.notes = rep.notes;
            }
            Err(e) => dto.error = Some(e.to_string()),
        }
        dto
    }

    fn from_flatness(kind: FlatnessKind, rep: Result<FlatnessReport, DerivedError>) -> Self {
        let key = match kind {
            FlatnessKind::Conharmonic => "phi_conharmonic_flat",
            FlatnessKind::Projective => "phi_projective_flat",
        };
        let mut dto = Self {
            kind: key.to_string(),
            label: kind.label().to_string(),
            holds: false,
            witness_indices: None,
            witness_value: None,
            notes: Vec::new(),
            contraction_identities: Vec::new(),
            error: None,
        };
        match rep {
            Ok(rep) => {
                dto.holds = rep.holds;
                dto.witness_indices = rep.witness.as_ref().map(|w| w.indices.clone());
                dto.witness_value = rep.witness.as_ref().map(|w| rats(&w.value));
                dto.contraction_identities = rep.contraction_identities.iter().map(IdentityDto::from).collect();
            }
            Err(e) => dto.error = Some(e.to_string()),
        }
        dto
    }

    fn line(&self) -> String {
        if let Some(e) = &self.error {
            return format!("{}: not evaluated ({e})", self.label);
        }
        let mut s = format!("{}: {}", self.label, if self.holds { "holds" } else { "fails" });
        if let (Some(ix), Some(v)) = (&self.witness_indices, &self.witness_value) {
            let value = if v.len() == 1 { v[0].clone() } else { vector::render(&parse_all(v)) };
            s.push_str(&format!(" at ({}), value {value}", frame_tuple(ix)));
        }
        s
    }
}

fn parse_all(v: &[String]) -> Vector {
    v.iter().map(|s| rat::parse(s).expect("rendered rational")).collect()
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SolitonDto {
    pub variant: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_shifted: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    /// `λ = constant + p_coefficient * p`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_constant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_p_coefficient: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constraint_satisfied: Option<bool>,
    pub summary: String,
}

impl SolitonDto {
    pub fn new(name: &str, s: &SolitonSolution) -> Self {
        Self {
            variant: name.to_string(),
            status: s.status.label().to_string(),
            lambda_shifted: s.lambda_shifted.as_ref().map(rat::render),
            mu: s.mu.as_ref().map(rat::render),
            lambda_constant: s.lambda_affine.as_ref().map(|a| rat::render(&a.constant)),
            lambda_p_coefficient: s.lambda_affine.as_ref().map(|a| rat::render(&a.p_coefficient)),
            lambda: s.render_lambda(),
            constraint_satisfied: s.constraint,
            summary: s.summary(),
        }
    }

    fn lines(&self) -> Vec<String> {
        let mut out = vec![format!("{}: {}", self.variant, self.summary)];
        if let (Some(l), Some(mu)) = (&self.lambda, &self.mu) {
            out.push(format!("  {l}, μ = {mu}"));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TheoremDto {
    pub id: String,
    pub claim: String,
    pub hypothesis_holds: bool,
    /// `null` when not applicable.
    pub conclusion_holds: Option<bool>,
    pub violation: bool,
    pub summary: String,
    pub details: String,
}

impl From<&TheoremEntry> for TheoremDto {
    fn from(e: &TheoremEntry) -> Self {
        Self {
            id: e.id.to_string(),
            claim: e.claim.clone(),
            hypothesis_holds: e.hypothesis_holds,
            conclusion_holds: e.conclusion_holds,
            violation: e.is_violation(),
            summary: e.summary.clone(),
            details: e.details.clone(),
        }
    }
}

impl TheoremDto {
    /// `Thm 4.1: hypothesis HOLDS, conclusion HOLDS (μ=1)`
    pub fn line(&self) -> String {
        let hyp = if self.hypothesis_holds { "HOLDS" } else { "FAILS" };
        let conclusion = match self.conclusion_holds {
            None => "n/a".to_string(),
            Some(true) => format!("HOLDS ({})", self.summary),
            Some(false) => format!("FAILS ({}) VIOLATION", self.summary),
        };
        format!("{}: hypothesis {hyp}, conclusion {conclusion}", self.id)
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DiscrepancyEntry {
    pub quantity: String,
    /// `[i, j]` of `nabla_{e_i} e_j` or `S(e_i, e_j)`.
    pub indices: [usize; 2],
    pub reference: String,
    pub engine: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DiscrepancySection {
    pub source: String,
    pub connection_agreeing: usize,
    pub connection: Vec<DiscrepancyEntry>,
    pub ricci_agreeing: usize,
    pub ricci: Vec<DiscrepancyEntry>,
}

type TableEntry = (usize, usize, Option<(usize, i64)>);

/// Reference connection table for `heisenberg5`, as
/// `(i, j, nabla_{e_i} e_j)` with `(k, c)` meaning `c e_k`; absent entries are 0.
const REFERENCE_CONNECTION: [TableEntry; 25] = [
    (1, 1, None),
    (1, 2, Some((3, 1))),
    (1, 3, Some((2, -1))),
    (1, 4, None),
    (1, 5, None),
    (2, 1, Some((3, -1))),
    (2, 2, None),
    (2, 3, Some((1, 1))),
    (2, 4, None),
    (2, 5, None),
    (3, 1, Some((2, -1))),
    (3, 2, Some((1, 1))),
    (3, 3, None),
    (3, 4, None),
    (3, 5, Some((4, 1))),
    (4, 1, None),
    (4, 2, None),
    (4, 3, Some((5, -1))),
    (4, 4, None),
    (4, 5, Some((3, 1))),
    (5, 1, None),
    (5, 2, None),
    (5, 3, None),
    (5, 4, None),
    (5, 5, None),
];

/// Reference diagonal Ricci values for `heisenberg5`.
const REFERENCE_RICCI: [(usize, i64); 5] = [(1, -2), (2, 3), (3, 4), (4, 4), (5, -1)];

/// Entry-by-entry comparison with the reference `heisenberg5` tables.
/// Returns `None` unless `m` is structurally the built-in `heisenberg5`.
pub fn discrepancies(m: &FrameManifold, pack: &CurvaturePack) -> Option<DiscrepancySection> {
    let reference = builtins::manifold("heisenberg5")?;
    if m.renamed("heisenberg5") != reference {
        return None;
    }
    let conn = levi_civita(m);
    let mut out = DiscrepancySection {
        source: "reference heisenberg5 tables".to_string(),
        connection_agreeing: 0,
        connection: Vec::new(),
        ricci_agreeing: 0,
        ricci: Vec::new(),
    };
    for (i, j, value) in REFERENCE_CONNECTION {
        let expected = match value {
            None => vector::zeros(5),
            Some((k, c)) => vector::scale(&rat::int(c), &m.basis(k - 1)),
        };
        let engine = conn.basis(i - 1, j - 1);
        if engine == expected {
            out.connection_agreeing += 1;
        } else {
            out.connection.push(DiscrepancyEntry {
                quantity: format!("∇_{{e{i}}} e{j}"),
                indices: [i, j],
                reference: vector::render(&expected),
                engine: vector::render(&engine),
            });
        }
    }
    for (i, v) in REFERENCE_RICCI {
        let engine = pack.ricci.get(&[i - 1, i - 1]);
        if *engine == rat::int(v) {
            out.ricci_agreeing += 1;
        } else {
            out.ricci.push(DiscrepancyEntry {
                quantity: format!("S(e{i},e{i})"),
                indices: [i, i],
                reference: v.to_string(),
                engine: rat::render(engine),
            });
        }
    }
    Some(out)
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Report {
    pub manifold: ManifoldSummary,
    pub structure: Vec<FlagDto>,
    /// Nonzero `nabla_{e_i} e_j`.
    pub connection: Vec<ConnectionEntry>,
    pub curvature: CurvatureSection,
    pub identities: IdentitySection,
    pub conditions: Vec<ConditionDto>,
    pub solitons: Vec<SolitonDto>,
    pub theorems: Vec<TheoremDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancies: Option<DiscrepancySection>,
}

impl Report {
    pub fn build(m: &FrameManifold, params: &PseudoProjectiveParams) -> Self {
        let d = m.dim();
        let conn = levi_civita(m);
        let pack = CurvaturePack::new(m, &conn);
        let class = classify_contact(m, &conn);

        let mut connection = Vec::new();
        let mut riemann = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let v = conn.basis(i, j);
                if !vector::is_zero(&v) {
                    connection.push(ConnectionEntry {
                        indices: [i + 1, j + 1],
                        value: rats(&v),
                    });
                }
                for k in 0..d {
                    let v = pack.riemann.curvature_basis(i, j, k);
                    if !vector::is_zero(&v) {
                        riemann.push(CurvatureEntry {
                            indices: [i + 1, j + 1, k + 1],
                            value: rats(&v),
                        });
                    }
                }
            }
        }
        let matrix = |t: &crate::kernel::Tensor| -> Vec<Vec<String>> {
            (0..d).map(|i| (0..d).map(|j| rat::render(t.get(&[i, j]))).collect()).collect()
        };
        let (ricci_class, star_class) = classify_einstein(m, &pack);
        let curvature = CurvatureSection {
            riemann,
            ricci: matrix(&pack.ricci),
            scalar: rat::render(&pack.scalar),
            star_ricci: matrix(&pack.star_ricci),
            ricci_class: (&ricci_class).into(),
            star_ricci_class: (&star_class).into(),
        };

        let identities = IdentitySection {
            sasakian: if class.sasakian.holds {
                sasakian_identity_suite(m, &conn, &pack).iter().map(IdentityDto::from).collect()
            } else {
                Vec::new()
            },
            classical: classical_identity_suite(m, &conn, &pack).iter().map(IdentityDto::from).collect(),
        };

        let mut conditions: Vec<ConditionDto> = ConditionKind::ALL
            .into_iter()
            .map(|k| ConditionDto::from_condition(k, derivation_condition(m, &pack, k, Some(params))))
            .collect();
        for kind in [FlatnessKind::Conharmonic, FlatnessKind::Projective] {
            conditions.push(ConditionDto::from_flatness(kind, phi_flatness(m, &pack, kind)));
        }

        let solitons = SolitonVariant::NAMES
            .into_iter()
            .map(|name| {
                let v = SolitonVariant::named(name).expect("known variant");
                SolitonDto::new(name, &solve_soliton(m, &pack, &conn, &v))
            })
            .collect();

        let theorems = verify_theorems(m, &pack, &conn, params).entries.iter().map(TheoremDto::from).collect();

        Self {
            manifold: ManifoldSummary {
                name: m.name().to_string(),
                dimension: d,
                n: m.half_dim(),
            },
            structure: structure_flags(&class),
            connection,
            curvature,
            identities,
            conditions,
            solitons,
            theorems,
            discrepancies: discrepancies(m, &pack),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        let m = &self.manifold;
        out.push(format!("manifold {} (dimension {}, n = {})", m.name, m.dimension, m.n));

        out.push(String::new());
        out.push("[structure]".into());
        out.extend(self.structure.iter().map(FlagDto::line));

        out.push(String::new());
        out.push("[connection] nonzero entries".into());
        if self.connection.is_empty() {
            out.push("all ∇_{ei} ej = 0".into());
        }
        for e in &self.connection {
            out.push(format!(
                "∇_{{e{}}} e{} = {}",
                e.indices[0],
                e.indices[1],
                vector::render(&parse_all(&e.value))
            ));
        }

        out.push(String::new());
        out.push("[curvature]".into());
        if self.curvature.riemann.is_empty() {
            out.push("R = 0".into());
        }
        for e in &self.curvature.riemann {
            out.push(format!(
                "R(e{},e{})e{} = {}",
                e.indices[0],
                e.indices[1],
                e.indices[2],
                vector::render(&parse_all(&e.value))
            ));
        }
        let d = m.dimension;
        for (label, mat) in [("S", &self.curvature.ricci), ("S*", &self.curvature.star_ricci)] {
            for i in 0..d {
                for j in i..d {
                    out.push(format!("{label}(e{},e{}) = {}", i + 1, j + 1, mat[i][j]));
                }
            }
        }
        out.push(format!("r = {}", self.curvature.scalar));
        out.push(format!("S class: {}", self.curvature.ricci_class.text()));
        out.push(format!("S* class: {}", self.curvature.star_ricci_class.text()));

        out.push(String::new());
        out.push("[identities]".into());
        if self.identities.sasakian.is_empty() {
            out.push("Sasakian identities skipped: not Sasakian".into());
        }
        out.extend(self.identities.sasakian.iter().map(IdentityDto::line));
        out.extend(self.identities.classical.iter().map(IdentityDto::line));

        out.push(String::new());
        out.push("[conditions]".into());
        for c in &self.conditions {
            out.push(c.line());
            out.extend(c.notes.iter().map(|n| format!("  {n}")));
            out.extend(c.contraction_identities.iter().map(|i| format!("  {}", i.line())));
        }

        out.push(String::new());
        out.push("[solitons]".into());
        for s in &self.solitons {
            out.extend(s.lines());
        }

        out.push(String::new());
        out.push("[theorems]".into());
        for t in &self.theorems {
            out.push(t.line());
            out.push(format!("  {}", t.details));
        }

        if let Some(dis) = &self.discrepancies {
            out.push(String::new());
            out.push(format!("[discrepancies] against the {}", dis.source));
            out.push(format!(
                "connection: {} entries agree, {} differ",
                dis.connection_agreeing,
                dis.connection.len()
            ));
            for e in &dis.connection {
                out.push(format!("  {}: reference {}, engine {}", e.quantity, e.reference, e.engine));
            }
            out.push(format!("ricci: {} entries agree, {} differ", dis.ricci_agreeing, dis.ricci.len()));
            for e in &dis.ricci {
                out.push(format!("  {}: reference {}, engine {}", e.quantity, e.reference, e.engine));
            }
        }

        let mut s = out.join("\n");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat::int;

    fn report(name: &str) -> Report {
        let m = builtins::manifold(name).unwrap();
        Report::build(&m, &PseudoProjectiveParams::new(int(1), int(1), None).unwrap())
    }

    #[test]
    fn heisenberg_text() {
        let text = report("heisenberg5").to_text();
        for needle in [
            "sasakian: yes",
            "S(e1,e1) = -2",
            "r = -4",
            "λ = 5 + (1/2)(p + 2/5), μ = -5",
            "∇_{e1} e2 = e3",
            "Thm 3.1: hypothesis HOLDS, conclusion HOLDS",
            "connection: 22 entries agree, 3 differ",
            "∇_{e3} e4: reference 0, engine -e5",
        ] {
            assert!(text.contains(needle), "missing {needle:?}\n{text}");
        }
    }

    #[test]
    fn discrepancy_section() {
        let rep = report("heisenberg5");
        let dis = rep.discrepancies.unwrap();
        let conn: Vec<_> = dis.connection.iter().map(|e| (e.indices, e.engine.as_str())).collect();
        assert_eq!(conn, vec![([3, 4], "-e5"), ([5, 3], "e4"), ([5, 4], "-e3")]);
        let ricci: Vec<_> = dis.ricci.iter().map(|e| (e.indices[0], e.reference.as_str())).collect();
        assert_eq!(ricci, vec![(2, "3"), (4, "4"), (5, "-1")]);
        assert!(dis.ricci.iter().all(|e| e.engine == "-2"));

        let renamed = builtins::manifold("heisenberg5").unwrap().renamed("copy");
        let p = PseudoProjectiveParams::new(int(1), int(1), None).unwrap();
        assert!(Report::build(&renamed, &p).discrepancies.is_some());
        assert!(report("sphere3").discrepancies.is_none());
    }

    #[test]
    fn sphere_json() {
        let json: serde_json::Value = serde_json::from_str(&report("sphere3").to_json()).unwrap();
        assert_eq!(json["curvature"]["ricci_class"]["einstein"]["alpha"], "2");
        assert_eq!(json["manifold"]["dimension"], 3);
    }

    #[test]
    fn abelian_is_flat() {
        let rep = report("abelian5");
        assert!(rep.connection.is_empty());
        assert!(rep.curvature.riemann.is_empty());
        assert!(rep.curvature.ricci.iter().flatten().all(|v| v == "0"));
        assert!(rep.to_text().contains("R = 0"));
    }

    #[test]
    fn deterministic() {
        assert_eq!(report("heisenberg5").to_json(), report("heisenberg5").to_json());
    }
}
